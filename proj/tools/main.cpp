#include "table.hpp"

#include "qcircle/equidist.hpp"
#include "qcircle/errors.hpp"
#include "qcircle/exact_formula.hpp"
#include "qcircle/goettsche.hpp"
#include "qcircle/maass_trace.hpp"
#include "qcircle/partitions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace qc;
using qc::cli::Format;
using qc::cli::Table;

namespace {

struct Globals {
    unsigned bits = 192;
    bool bits_given = false;
    unsigned threads = 1;
    std::string surface = "cp2";
};

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    try {
        while (std::getline(ss, item, ',')) {
            auto dots = item.find("..");
            if (dots == std::string::npos) {
                out.push_back(std::stol(item));
            } else {
                long a = std::stol(item.substr(0, dots)), b = std::stol(item.substr(dots + 2));
                if (b < a) throw ValidationError("empty range " + item);
                for (long v = a; v <= b; ++v) out.push_back(v);
            }
        }
    } catch (const std::logic_error&) {
        throw ValidationError("malformed integer list: " + s);
    }
    if (out.empty()) throw ValidationError("empty integer list");
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

HodgeDiamond load_surface(const std::string& spec) {
    if (spec == "cp2") return HodgeDiamond::from_triple(0, 0, 1, "cp2");
    if (spec == "k3") return HodgeDiamond::from_triple(0, 1, 20, "k3");
    if (spec == "abelian") return HodgeDiamond::from_triple(2, 1, 4, "abelian");
    if (spec == "enriques") return HodgeDiamond::from_triple(0, 0, 10, "enriques");
    std::ifstream in(spec);
    if (!in) throw ValidationError("unknown surface alias or unreadable file: " + spec);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("invalid surface JSON: " + std::string(e.what()));
    }
    auto field = [&](const char* k) {
        if (!j.is_object() || !j.contains(k) || !j[k].is_number_integer())
            throw ValidationError(std::string("surface JSON needs integer field ") + k);
        return j[k].get<long>();
    };
    std::string name = j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
    return HodgeDiamond::from_triple(field("h10"), field("h20"), field("h11"), name);
}

nlohmann::ordered_json surface_json(const HodgeDiamond& S) {
    nlohmann::ordered_json j;
    j["name"] = S.name;
    j["h10"] = S.h10();
    j["h20"] = S.h20();
    j["h11"] = S.h11();
    j["chi"] = S.chi();
    j["sigma"] = S.sigma();
    return j;
}

std::string surface_label(const HodgeDiamond& S) {
    std::ostringstream s;
    s << (S.name.empty() ? "surface" : S.name) << " (h10=" << S.h10() << ", h20=" << S.h20() << ", h11=" << S.h11()
      << "; chi=" << S.chi() << ", sigma=" << S.sigma() << ")";
    return s.str();
}

std::string num(const Real& x) {
    if (boost::multiprecision::abs(x) >= Real(1e9)) return sci(x, 6);
    return truncate_decimal(x, 4);
}

std::string pair_str(const ResiduePair& r) {
    return "(" + std::to_string(r.first) + "," + std::to_string(r.second) + ")";
}

// subcommands

struct PartitionArgs {
    std::string table = "10,20,40,80";
    long congruences = 0;
};

Table run_partition(const PartitionArgs& a) {
    Table t;
    t.command = "partition";
    if (a.congruences > 0) {
        if (a.congruences > 200000) throw ValidationError("congruence bound too large");
        auto v = check_ramanujan_congruences(static_cast<int>(a.congruences));
        t.caption = "Ramanujan congruences for n <= " + std::to_string(a.congruences);
        t.columns = {"modulus", "violations"};
        for (int m : {5, 7, 11}) {
            long c = std::count_if(v.begin(), v.end(), [&](const CongruenceViolation& x) { return x.modulus == m; });
            t.add({std::to_string(m), std::to_string(c)});
        }
        return t;
    }
    auto ns = parse_list(a.table);
    long top = *std::max_element(ns.begin(), ns.end());
    if (*std::min_element(ns.begin(), ns.end()) < 0 || top > 100000) throw ValidationError("n out of range");
    auto r = p_recurrence(static_cast<int>(top));
    auto e = p_euler_product(static_cast<int>(top));
    t.caption = "Partition numbers by pentagonal recurrence and Euler product";
    t.columns = {"n", "p(n) recurrence", "p(n) product", "agree"};
    for (long n : ns) t.add({std::to_string(n), r.values[n].str(), e.values[n].str(), r.values[n] == e.values[n] ? "yes" : "no"});
    return t;
}

struct RademacherArgs {
    std::string n = "10,20,40,80";
    long K = 0;
    bool terms = false;
};

Table run_rademacher(const RademacherArgs& a, const Globals& g) {
    auto ns = parse_list(a.n);
    Table t;
    t.command = "rademacher";
    t.caption = "Rademacher series truncated at K (default ceil(2 sqrt n))";
    if (a.terms)
        t.columns = {"n", "k", "bessel argument", "term"};
    else
        t.columns = {"n", "K", "approximation", "rounded", "p(n)", "tail bound"};
    long top = *std::max_element(ns.begin(), ns.end());
    if (*std::min_element(ns.begin(), ns.end()) < 1 || top > 100000) throw ValidationError("n out of range");
    auto p = p_recurrence(static_cast<int>(top));
    for (long n : ns) {
        long K = a.K > 0 ? a.K : static_cast<long>(std::ceil(2 * std::sqrt(static_cast<double>(n))));
        auto r = rademacher_p(n, K, g.bits_given ? g.bits : 0, g.threads);
        PrecisionScope ps(r.precision_bits);
        if (a.terms) {
            for (const auto& term : r.terms)
                t.add({std::to_string(n), std::to_string(term.k), num(term.bessel_arg), sci(term.term_value, 6)});
        } else {
            std::ostringstream tb;
            tb << std::setprecision(3) << r.tail_bound;
            t.add({std::to_string(n), std::to_string(K), num(r.approx), r.rounded.str(), p.values[n].str(), tb.str()});
        }
    }
    return t;
}

struct NearRootArgs {
    std::string t = "0.5,0.3,0.1,0.01";
    std::string roots = "0/1,1/2,1/3,1/4";
};

Table run_near_roots(const NearRootArgs& a, const Globals& g) {
    PrecisionScope ps(g.bits);
    std::vector<std::pair<long, long>> roots;
    for (const auto& r : split(a.roots, ',')) {
        auto parts = split(r, '/');
        try {
            if (parts.size() != 2) throw std::invalid_argument(r);
            roots.push_back({std::stol(parts[0]), std::stol(parts[1])});
        } catch (const std::logic_error&) {
            throw ValidationError("root must be h/k: " + r);
        }
    }
    Table t;
    t.command = "p-near-roots";
    t.caption = "|P(zeta e^{-t})| with zeta = e(h/k)";
    t.columns = {"t"};
    for (auto [h, k] : roots) t.columns.push_back("e(" + std::to_string(h) + "/" + std::to_string(k) + ")");
    for (const auto& ts : split(a.t, ',')) {
        Real tv;
        try {
            tv = Real(ts);
        } catch (const std::exception&) {
            throw ValidationError("malformed t: " + ts);
        }
        if (tv <= 0) throw ValidationError("t must be positive");
        std::vector<std::string> row{ts};
        for (auto [h, k] : roots) row.push_back(sci(eval_P_near_root(h, k, tv, g.bits), 5));
        t.add(row);
    }
    return t;
}

struct GoettscheArgs {
    long n = 3;
};

Table run_goettsche(const GoettscheArgs& a, const Globals& g) {
    auto S = load_surface(g.surface);
    if (a.n < 0 || a.n > 200) throw ValidationError("n out of range");
    auto table = goettsche_expand(S, static_cast<int>(a.n));
    Table t;
    t.command = "goettsche";
    t.surface = surface_json(S);
    t.caption = "Hodge numbers h^{s,t} of Hilb^n for " + surface_label(S);
    t.columns = {"n", "s", "t", "h^{s,t}"};
    for (int n = 0; n <= a.n; ++n)
        for (const auto& [st, h] : hilbert_hodge_numbers(table, n))
            if (h != 0) t.add({std::to_string(n), std::to_string(st.first), std::to_string(st.second), h.str()});
    return t;
}

struct ContextArgs {
    long r1 = 1, l1 = 3, r2 = 1, l2 = 2;
};

struct XiArgs {
    ContextArgs c;
    long cutoff = 75;
    std::string n = "1..5";
    bool leading_only = false;
    bool trace = false;
};

Table run_xi(const XiArgs& a, const Globals& g) {
    auto S = load_surface(g.surface);
    auto ns = parse_list(a.n);
    if (*std::min_element(ns.begin(), ns.end()) < 1) throw ValidationError("n must be positive");
    if (a.cutoff < 1) throw ValidationError("cutoff must be positive");
    auto ctx = make_context(S, a.c.r1, a.c.l1, a.c.r2, a.c.l2, g.bits);
    long top = *std::max_element(ns.begin(), ns.end());
    auto table = goettsche_expand(S, static_cast<int>(top));
    PrecisionScope ps(g.bits);
    auto exact = specialize(table.series, expi2pi(Rational(a.c.r1, a.c.l1)), expi2pi(Rational(a.c.r2, a.c.l2)), g.bits);
    XiOptions opt;
    opt.threads = g.threads;
    opt.policy = a.leading_only ? JPolicy::LeadingOnly : JPolicy::Full;
    Table t;
    t.command = "xi-exact";
    t.surface = surface_json(S);
    std::ostringstream cap;
    cap << "Exact-formula truncation N=" << a.cutoff << " at x=e(" << a.c.r1 << "/" << a.c.l1 << "), y=e(" << a.c.r2
        << "/" << a.c.l2 << ") for " << surface_label(S);
    t.caption = cap.str();
    t.columns = {"n", "Re xi", "Im xi", "exact"};
    for (long n : ns) {
        std::vector<XiTraceRecord> rec;
        if (a.trace) opt.trace = &rec;
        Complex x = xi_truncated(ctx, n, a.cutoff, opt);
        for (const auto& r : rec) {
            nlohmann::ordered_json j;
            j["n"] = n;
            j["iota1"] = r.iota1;
            j["iota2"] = r.iota2;
            j["j"] = r.j;
            j["k"] = r.k;
            j["re"] = sci(r.term.re, 12);
            j["im"] = sci(r.term.im, 12);
            std::cerr << j.dump() << "\n";
        }
        t.add({std::to_string(n), num(x.re), num(x.im), num(exact.coeffs[n].re)});
    }
    return t;
}

struct GammaArgs {
    long l1 = 3, l2 = 2;
    std::string n = "1..10";
    bool roots = false;
};

Table run_gamma(const GammaArgs& a, const Globals& g) {
    auto S = load_surface(g.surface);
    auto ns = parse_list(a.n);
    if (a.l1 < 1 || a.l2 < 1) throw ValidationError("moduli must be positive");
    if (*std::min_element(ns.begin(), ns.end()) < 0) throw ValidationError("n must be nonnegative");
    int top = static_cast<int>(*std::max_element(ns.begin(), ns.end()));
    auto table = goettsche_expand(S, top);
    Table t;
    t.command = "gamma";
    t.surface = surface_json(S);
    t.caption = "gamma_{(r1,l1),(r2,l2)}(n) with (l1,l2)=(" + std::to_string(a.l1) + "," + std::to_string(a.l2) +
                ") via " + (a.roots ? "root-of-unity average" : "direct filtering") + " for " + surface_label(S);
    t.columns = {"(r1,r2)"};
    for (long n : ns) t.columns.push_back("n=" + std::to_string(n));
    std::vector<std::vector<ComplexQSeries>> via;
    if (a.roots) via = C_via_roots_all(table, a.l1, a.l2, top, g.bits);
    PrecisionScope ps(g.bits);
    for (long r1 = 0; r1 < a.l1; ++r1)
        for (long r2 = 0; r2 < a.l2; ++r2) {
            std::vector<std::string> row{pair_str({r1, r2})};
            for (long n : ns)
                row.push_back(a.roots ? num(via[r1][r2].coeffs[n].re)
                                      : gamma_direct(table, r1, a.l1, r2, a.l2, static_cast<int>(n)).str());
            t.add(row);
        }
    return t;
}

struct ThetaArgs {
    long l1 = 3, l2 = 2;
    std::string n = "5,10,15,20,25";
};

Table run_theta(const ThetaArgs& a, const Globals& g) {
    auto S = load_surface(g.surface);
    auto ns = parse_list(a.n);
    std::vector<int> nl(ns.begin(), ns.end());
    auto rep = convergence_report(S, a.l1, a.l2, nl);
    Table t;
    t.command = "theta";
    t.surface = surface_json(S);
    t.caption = "Theta proportions for (l1,l2)=(" + std::to_string(a.l1) + "," + std::to_string(a.l2) + ") on " +
                surface_label(S);
    t.columns = {"(r1,r2)"};
    for (int n : nl) t.columns.push_back("n=" + std::to_string(n));
    for (const auto& row : rep.rows) {
        std::vector<std::string> cells{pair_str(row.r)};
        for (const auto& v : row.values) cells.push_back(truncate_decimal(v, 4));
        t.add(cells);
    }
    return t;
}

struct ClassifyArgs {
    long l1 = 3, l2 = 2;
};

Table run_classify(const ClassifyArgs& a, const Globals& g) {
    auto S = load_surface(g.surface);
    auto v = classify(S, a.l1, a.l2);
    Table t;
    t.command = "classify";
    t.surface = surface_json(S);
    t.caption = "Equidistribution verdict for (l1,l2)=(" + std::to_string(a.l1) + "," + std::to_string(a.l2) + ") on " +
                surface_label(S);
    t.columns = {"field", "value"};
    t.add({"equidistributed", v.equidistributed ? "yes" : "no"});
    std::string cases, R;
    for (int c : v.cases) cases += (cases.empty() ? "" : ",") + std::to_string(c);
    for (const auto& r : v.R) R += (R.empty() ? "" : ",") + pair_str(r);
    t.add({"cases", cases.empty() ? "none" : cases});
    t.add({"R", "{" + R + "}"});
    t.add({"lambda minimum at", v.lambda_min_witness ? pair_str(*v.lambda_min_witness) : "none"});
    return t;
}

struct MaassArgs {
    std::string n = "1";
};

Table run_maass(const MaassArgs& a, const Globals& g) {
    auto ns = parse_list(a.n);
    if (*std::min_element(ns.begin(), ns.end()) < 1) throw ValidationError("n must be positive");
    long top = *std::max_element(ns.begin(), ns.end());
    auto p = p_recurrence(static_cast<int>(top));
    unsigned bits = g.bits_given ? g.bits : 256;
    Table t;
    t.command = "maass-trace";
    t.caption = "Maass trace over Gamma0(6)-classes of discriminant 1-24n";
    t.columns = {"n", "Q", "Re P(alpha_Q)", "Im P(alpha_Q)"};
    for (long n : ns) {
        auto tr = trace(n, bits, g.threads);
        PrecisionScope ps(bits);
        std::string sn = std::to_string(n);
        for (const auto& term : tr.terms)
            t.add({sn, "[" + std::to_string(term.Q.a) + "," + std::to_string(term.Q.b) + "," + std::to_string(term.Q.c) + "]",
                   num(term.value.re), num(term.value.im)});
        t.add({sn, "trace", num(tr.total.re), num(tr.total.im)});
        t.add({sn, "trace/(24n-1)", num(tr.p_estimate), ""});
        t.add({sn, "p(n)", p.values[n].str(), ""});
    }
    return t;
}

void add_context(CLI::App* sub, ContextArgs& c) {
    sub->add_option("--r1", c.r1, "x residue");
    sub->add_option("--l1", c.l1, "x modulus");
    sub->add_option("--r2", c.r2, "y residue");
    sub->add_option("--l2", c.l2, "y modulus");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partition and Hilbert-scheme Hodge number calculator"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    std::string format = "md";
    auto* bits_opt = app.add_option("--precision-bits", g.bits, "working precision in bits")->check(CLI::Range(16u, 100000u));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"md", "csv", "json"}));
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--surface", g.surface, "surface alias (cp2, k3, abelian, enriques) or JSON path");

    Table out;
    std::function<Table()> action;

    PartitionArgs pa;
    auto* s_part = app.add_subcommand("partition", "partition numbers by two exact routes");
    s_part->add_option("--table", pa.table, "list of n");
    s_part->add_option("--congruences", pa.congruences, "check Ramanujan congruences up to this bound");
    s_part->callback([&] { action = [&] { return run_partition(pa); }; });

    RademacherArgs ra;
    auto* s_rad = app.add_subcommand("rademacher", "Rademacher exact formula");
    s_rad->add_option("--n", ra.n, "list of n");
    s_rad->add_option("--K", ra.K, "truncation point");
    s_rad->add_flag("--terms", ra.terms, "emit per-k terms");
    s_rad->callback([&] { action = [&] { return run_rademacher(ra, g); }; });

    NearRootArgs na;
    auto* s_near = app.add_subcommand("p-near-roots", "size of the partition generating function near roots of unity");
    s_near->add_option("--t", na.t, "comma-separated radii parameters t");
    s_near->add_option("--roots", na.roots, "comma-separated h/k");
    s_near->callback([&] { action = [&] { return run_near_roots(na, g); }; });

    GoettscheArgs ga;
    auto* s_goe = app.add_subcommand("goettsche", "Hodge numbers of Hilbert schemes of points");
    s_goe->add_option("--n", ga.n, "largest number of points");
    s_goe->callback([&] { action = [&] { return run_goettsche(ga, g); }; });

    XiArgs xa;
    auto* s_xi = app.add_subcommand("xi-exact", "truncated exact formula for specialized coefficients");
    add_context(s_xi, xa.c);
    s_xi->add_option("--cutoff", xa.cutoff, "Farey cutoff N");
    s_xi->add_option("--n", xa.n, "list or range of n, e.g. 1..5");
    s_xi->add_flag("--leading-only", xa.leading_only, "keep only j=0 polar terms");
    s_xi->add_flag("--trace", xa.trace, "emit per-term records on stderr");
    s_xi->callback([&] { action = [&] { return run_xi(xa, g); }; });

    GammaArgs gma;
    auto* s_gam = app.add_subcommand("gamma", "congruence-restricted signed Hodge sums");
    s_gam->add_option("--l1", gma.l1, "y-exponent modulus");
    s_gam->add_option("--l2", gma.l2, "x-exponent modulus");
    s_gam->add_option("--n", gma.n, "list or range of n");
    s_gam->add_flag("--roots", gma.roots, "use the root-of-unity average");
    s_gam->callback([&] { action = [&] { return run_gamma(gma, g); }; });

    ThetaArgs ta;
    auto* s_theta = app.add_subcommand("theta", "Theta proportions by residue pair");
    s_theta->add_option("--l1", ta.l1, "y-exponent modulus");
    s_theta->add_option("--l2", ta.l2, "x-exponent modulus");
    s_theta->add_option("--n", ta.n, "list or range of n");
    s_theta->callback([&] { action = [&] { return run_theta(ta, g); }; });

    ClassifyArgs ca;
    auto* s_cls = app.add_subcommand("classify", "equidistribution classifier");
    s_cls->add_option("--l1", ca.l1, "y-exponent modulus");
    s_cls->add_option("--l2", ca.l2, "x-exponent modulus");
    s_cls->callback([&] { action = [&] { return run_classify(ca, g); }; });

    MaassArgs ma;
    auto* s_maass = app.add_subcommand("maass-trace", "partition numbers as traces of a weak Maass form");
    s_maass->add_option("--n", ma.n, "list or range of n");
    s_maass->callback([&] { action = [&] { return run_maass(ma, g); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    g.bits_given = bits_opt->count() > 0;
    Format f = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Markdown;

    try {
        PrecisionScope ps(g.bits);
        out = action();
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    cli::render(std::cout, out, f);
    return 0;
}
