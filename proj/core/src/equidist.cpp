#include "qcircle/equidist.hpp"

#include "qcircle/dedekind.hpp"
#include "qcircle/errors.hpp"

#include <algorithm>

namespace qc {

Rational lambda(const HodgeDiamond& S, const Rational& x, const Rational& y) {
    return S.h10() * (P2(x) + P2(y)) - S.h[0][0] * P2(x + y) - S.h20() * P2(x - y);
}

LambdaProfile lambda_profile(const HodgeDiamond& S, long l1, long l2) {
    LambdaProfile p;
    for (long j1 = 0; j1 < l1; ++j1)
        for (long j2 = 0; j2 < l2; ++j2) p.values[{j1, j2}] = lambda(S, Rational(j1, l1), Rational(j2, l2));
    return p;
}

EquidistVerdict classify(const HodgeDiamond& S, long l1, long l2) {
    if (l1 < 1 || l2 < 1) throw ValidationError("classify: moduli must be positive");
    long chi = S.chi(), sigma = S.sigma();
    if (chi < sigma) throw HypothesisViolation("need chi >= sigma");
    long g = gcd_l(l1, l2);
    long h10 = S.h10(), h20 = S.h20();
    auto all_pairs = [&](auto pred) {
        std::set<ResiduePair> R;
        for (long r1 = 0; r1 < l1; ++r1)
            for (long r2 = 0; r2 < l2; ++r2)
                if (pred(r1, r2)) R.insert({r1, r2});
        return R;
    };
    EquidistVerdict v;
    std::vector<std::pair<int, std::set<ResiduePair>>> hits;
    if (h10 == 0 && h20 == 0) hits.push_back({1, all_pairs([&](long a, long b) { return mod_l(a - b, g) == 0; })});
    if (h10 == 0 && h20 > 0) {
        long g2 = gcd_l(g, 2);
        hits.push_back({2, all_pairs([&](long a, long b) { return mod_l(a - b, g2) == 0; })});
    }
    long mn = std::min(l1, l2);
    if (chi + sigma == 0 && chi != 0 && mn == 1) hits.push_back({3, {{0, 0}}});
    if (chi + sigma == 0 && chi == 0 && mn == 1) hits.push_back({4, {}});
    if (chi != 0 && l1 == 1 && l2 == 1) hits.push_back({5, {{0, 0}}});
    if (chi == 0 && l1 == 1 && l2 == 1) hits.push_back({6, {}});

    LambdaProfile prof = lambda_profile(S, l1, l2);
    Rational l00 = prof.values.at({0, 0});
    bool strict = true;
    for (const auto& [j, val] : prof.values) {
        if (j == ResiduePair{0, 0}) continue;
        if (!(l00 < val)) strict = false;
        if (!v.lambda_min_witness || val < prof.values.at(*v.lambda_min_witness)) v.lambda_min_witness = j;
    }
    if (h10 > 0 && chi + sigma > 0 && strict)
        hits.push_back({7, all_pairs([](long, long) { return true; })});

    // k-scaled minimum from the proof sketch
    long L = lcm_l(l1, l2);
    bool sketch = true;
    for (const auto& [j, val] : prof.values) {
        if (j == ResiduePair{0, 0}) continue;
        std::optional<Rational> best;
        for (long k = 1; k <= L; ++k) {
            Rational x = Rational(k * j.first, l1), y = Rational(k * j.second, l2);
            Rational s = lambda(S, x, y) / (k * k);
            if (!best || s < *best) best = s;
        }
        if (!(l00 < *best)) sketch = false;
    }
    v.sketch_case7 = h10 > 0 && chi + sigma > 0 && sketch;
    v.sketch_disagrees = v.sketch_case7 != (h10 > 0 && chi + sigma > 0 && strict);

    for (const auto& h : hits) v.cases.push_back(h.first);
    v.equidistributed = !hits.empty();
    if (!hits.empty()) v.R = hits.front().second;
    return v;
}

Rational theta(const HilbertHodgeTable& t, long r1, long l1, long r2, long l2, int n) {
    BigInt den = 0;
    for (long j1 = 0; j1 < l1; ++j1)
        for (long j2 = 0; j2 < l2; ++j2) den += gamma_direct(t, j1, l1, j2, l2, n);
    if (den == 0) throw ZeroDenominator();
    return Rational(gamma_direct(t, r1, l1, r2, l2, n), den);
}

ConvergenceReport convergence_report(const HodgeDiamond& S, long l1, long l2, const std::vector<int>& n_list) {
    int N = 0;
    for (int n : n_list) N = std::max(N, n);
    HilbertHodgeTable t = goettsche_expand(S, N);
    ConvergenceReport rep;
    rep.l1 = l1;
    rep.l2 = l2;
    rep.n_list = n_list;
    rep.verdict = classify(S, l1, l2);
    for (long r1 = 0; r1 < l1; ++r1)
        for (long r2 = 0; r2 < l2; ++r2) {
            ConvergenceRow row{{r1, r2}, {}};
            for (int n : n_list) row.values.push_back(theta(t, r1, l1, r2, l2, n));
            rep.rows.push_back(std::move(row));
        }
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        Rational dev = 0;
        if (!rep.verdict.R.empty()) {
            Rational u(1, static_cast<long>(rep.verdict.R.size()));
            for (const auto& row : rep.rows)
                if (rep.verdict.R.count(row.r)) dev = std::max(dev, Rational(abs(row.values[i] - u)));
        }
        rep.max_deviation.push_back(dev);
    }
    return rep;
}

}  // namespace qc
