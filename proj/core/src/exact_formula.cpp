#include "qcircle/exact_formula.hpp"

#include "qcircle/dedekind.hpp"
#include "qcircle/errors.hpp"
#include "qcircle/parallel.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <stdexcept>

namespace qc {

namespace {

Complex cI() { return Complex(Real(0), Real(1)); }

Real eps_for(unsigned bits) { return boost::multiprecision::pow(Real(2), -static_cast<int>(bits) - 16); }

long ceil_q(const Rational& x) { return -floor_q(-x).convert_to<long>(); }

}  // namespace

long ExactFormulaContext::j_count(long iota2) const {
    Rational lh = -Rational(L) * H.at(mod_l(iota2, L));
    if (lh <= 0) return 0;
    return ceil_q(lh);
}

Rational weight_G(const HodgeDiamond& S) { return -Rational(S.chi() - S.sigma(), 4); }

Rational cusp_order_H(const HodgeDiamond& S, long r1, long l1, long r2, long l2, long iota2) {
    Rational x = Rational(iota2 * r1, l1), y = Rational(iota2 * r2, l2);
    Rational v = S.h10() * (P2(x) + P2(y)) - S.h[0][0] * P2(x + y) - S.h20() * P2(x - y) - Rational(S.h11(), 12);
    return v / 2;
}

long hprime(long h, long k, long L) {
    if (k == 1 && L == 1) return 0;
    long kL = k * L;
    if (gcd_l(mod_l(h, kL), kL) == 1) return mod_l(-inv_mod(h, kL), kL);
    long g = gcd_l(k, L);
    long x = 0;
    while (mod_l(h * x + 1, g) != 0) ++x;
    long base = (k == 1) ? 0 : mod_l(-inv_mod(h, k), k);
    long m = lcm_l(k, L);
    for (long hp = base; hp < m; hp += k)
        if (mod_l(hp - x, L) == 0) return hp;
    throw std::logic_error("hprime: no solution");
}

Complex omega_ctx(const ExactFormulaContext& ctx, long h, long k) {
    Rational X = -Rational(ctx.E) * dedekind_sum(h, k);
    for (const auto& p : ctx.pairs) X -= 2 * Rational(p.e) * gen_dedekind_sum(p.theta, h, k);
    return expi2pi(X / 2);
}

namespace {

void mul_binom(std::vector<Complex>& s, const Complex& coef, long idx, long power) {
    long M = static_cast<long>(s.size());
    if (idx >= M || idx < 1) return;
    for (long rep = 0; rep < (power < 0 ? -power : power); ++rep) {
        if (power > 0) {
            for (long i = M - 1; i >= idx; --i) s[i] -= coef * s[i - idx];
        } else {
            for (long i = idx; i < M; ++i) s[i] += coef * s[i - idx];
        }
    }
}

Complex sin_c(const Rational& x) { return Complex(boost::multiprecision::sin(pi() * to_real(x))); }

}  // namespace

CuspExpansion cusp_expansion(const ExactFormulaContext& ctx, long h, long k, long hp, int J) {
    PrecisionScope scope(ctx.precision_bits);
    const long L = ctx.L;
    long M = static_cast<long>(J) + 1;
    Complex eps = exp(Complex(Real(0), pi() * (to_real(Rational(h - hp, 12 * k)) - to_real(dedekind_sum(h, k)))));
    CuspExpansion out;
    out.C = pow_int(eps, ctx.E) * expi2pi(Rational(-ctx.E * h, 24 * k));
    out.H = Rational(ctx.E, 24);
    out.a.assign(static_cast<std::size_t>(M), Complex(0));
    out.a[0] = Complex(1);
    for (const auto& p : ctx.pairs) {
        Rational A = Rational(k) * p.theta;
        long a0 = floor_q(A).convert_to<long>();
        Rational al = A - Rational(a0);
        Rational B = -Rational(hp) * p.theta;
        Complex f = -cI() * eps * eps / (Complex(2) * sin_c(p.theta));
        f *= expi2pi(Rational(-h, 12 * k));
        if (a0 % 2) f = -f;
        f *= expi2pi(-Rational(a0) * B);
        f *= exp(Complex(Real(0), -pi() * to_real(A * A * hp / k)));
        Complex eB = expi2pi(B), emB = expi2pi(-B);
        if (al > 0) {
            f *= cI() * expi2pi(-B / 2);
            out.H += Rational(p.e) * P2(al) / 2;
            long ia = (al * L).convert_to<long>();
            for (long n = 0; n * L < M + L; ++n) {
                mul_binom(out.a, eB, n * L + ia, p.e);
                if (n >= 1) mul_binom(out.a, emB, n * L - ia, p.e);
            }
        } else {
            f *= Complex(2) * sin_c(B);
            out.H += Rational(p.e, 12);
            for (long n = 1; n * L < M; ++n) {
                mul_binom(out.a, eB, n * L, p.e);
                mul_binom(out.a, emB, n * L, p.e);
            }
        }
        out.C *= pow_int(f, p.e);
    }
    for (long n = 1; n * L < M; ++n) mul_binom(out.a, Complex(1), n * L, ctx.E);
    return out;
}

std::vector<Complex> zstar_coeffs(const ExactFormulaContext& ctx, long iota1, long iota2, int J_max) {
    auto it = ctx.reps.find({mod_l(iota1, ctx.L), mod_l(iota2, ctx.L)});
    if (it == ctx.reps.end()) throw ValidationError("zstar_coeffs: empty residue class");
    return cusp_expansion(ctx, it->second.h, it->second.k, it->second.hp, J_max).a;
}

Complex Z_eval(const ExactFormulaContext& ctx, const Complex& tau) {
    PrecisionScope scope(ctx.precision_bits);
    Complex x = expi2pi(Rational(ctx.r1, ctx.l1)), y = expi2pi(Rational(ctx.r2, ctx.l2));
    struct F {
        Complex m;
        long e;
    };
    std::vector<F> fs;
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) {
            long h = ctx.surface.h[s][t];
            if (!h) continue;
            fs.push_back({pow_int(x, s - 1) * pow_int(y, t - 1), ((s + t) % 2) ? h : -h});
        }
    Complex q = exp(Complex(Real(0), 2 * pi()) * tau);
    Complex qn(1), val(1);
    Real eps = eps_for(ctx.precision_bits);
    for (;;) {
        qn *= q;
        for (const auto& f : fs) val *= pow_int(Complex(1) - f.m * qn, f.e);
        if (abs(qn) < eps) break;
    }
    return val;
}

Complex Zstar_eval(const ExactFormulaContext& ctx, long k, long hp, const Complex& taup) {
    PrecisionScope scope(ctx.precision_bits);
    const long L = ctx.L;
    struct T {
        long ia;
        Complex eB, emB;
        long e;
    };
    std::vector<T> ts;
    for (const auto& p : ctx.pairs) {
        Rational al = frac(Rational(k) * p.theta);
        Rational B = -Rational(hp) * p.theta;
        ts.push_back({(al * L).convert_to<long>(), expi2pi(B), expi2pi(-B), p.e});
    }
    Complex qL = exp(Complex(Real(0), 2 * pi()) * taup / Complex(Real(L)));
    Complex qi(1), val(1);
    Real eps = eps_for(ctx.precision_bits);
    for (long idx = 1;; ++idx) {
        qi *= qL;
        for (const auto& t : ts) {
            if (t.ia > 0) {
                if (mod_l(idx - t.ia, L) == 0) val *= pow_int(Complex(1) - t.eB * qi, t.e);
                if (mod_l(idx + t.ia, L) == 0) val *= pow_int(Complex(1) - t.emB * qi, t.e);
            } else if (idx % L == 0) {
                val *= pow_int((Complex(1) - t.eB * qi) * (Complex(1) - t.emB * qi), t.e);
            }
        }
        if (idx % L == 0) val *= pow_int(Complex(1) - qi, ctx.E);
        if (abs(qi) < eps && idx > 2 * L) break;
    }
    return val;
}

namespace {

Complex rhs_without_alpha_prime(const ExactFormulaContext& ctx, long h, long k, long hp, const Complex& z) {
    Complex taup = (Complex(Real(hp)) + cI() / z) / Complex(Real(k));
    Rational H = ctx.H.at(mod_l(k, ctx.L));
    Complex expo = Complex(Real(-2) * pi() / k) * (z * (Real(ctx.chi) / 24) + Complex(to_real(H)) / z);
    return omega_ctx(ctx, h, k) * ctx.alpha * pow(z, -to_real(ctx.G)) * exp(expo) * Zstar_eval(ctx, k, hp, taup);
}

}  // namespace

ExactFormulaContext make_context(const HodgeDiamond& S, long r1, long l1, long r2, long l2, unsigned precision_bits) {
    if (l1 < 1 || l2 < 1) throw ValidationError("moduli must be positive");
    if (S.chi() < 0 || S.chi() < S.sigma()) throw HypothesisViolation("need chi >= 0 and chi >= sigma");
    PrecisionScope scope(precision_bits);
    ExactFormulaContext ctx;
    ctx.surface = S;
    ctx.r1 = mod_l(r1, l1);
    ctx.l1 = l1;
    ctx.r2 = mod_l(r2, l2);
    ctx.l2 = l2;
    ctx.L = lcm_l(l1, l2);
    ctx.chi = S.chi();
    ctx.sigma = S.sigma();
    ctx.precision_bits = precision_bits;
    Rational tx(ctx.r1, l1), ty(ctx.r2, l2);
    const std::pair<Rational, long> raw[4] = {
        {tx, S.h10()}, {ty, S.h10()}, {tx + ty, -S.h[0][0]}, {tx - ty, -S.h20()}};
    ctx.E = -S.h11();
    for (const auto& [th, e] : raw) {
        if (e == 0) continue;
        Rational f = frac(th);
        if (f == 0)
            ctx.E += 2 * e;
        else
            ctx.pairs.push_back({f, e});
    }
    ctx.G = Rational(ctx.E, 2);
    ctx.alpha = Complex(1);
    for (const auto& p : ctx.pairs) {
        long v = numerator(p.theta).convert_to<long>(), N = denominator(p.theta).convert_to<long>();
        ctx.alpha *= pow_int(alpha_N(0, v, N), -p.e);
    }
    for (long i2 = 0; i2 < ctx.L; ++i2) {
        Rational H = cusp_order_H(S, ctx.r1, l1, ctx.r2, l2, i2);
        Rational check = Rational(ctx.E, 24);
        for (const auto& p : ctx.pairs) check += Rational(p.e) * P2(Rational(i2) * p.theta) / 2;
        if (H != check) throw std::logic_error("cusp order mismatch");
        ctx.H[i2] = H;
    }
    const long L = ctx.L;
    for (long i1 = 0; i1 < L; ++i1)
        for (long i2 = 0; i2 < L; ++i2) {
            bool found = false;
            ClassRep rep;
            for (long k = (i2 == 0 ? L : i2); k <= i2 + 64 * L && !found; k += L)
                for (long h = i1; h < k; h += L)
                    if (gcd_l(h, k) == 1) {
                        rep = {h, k, hprime(h, k, L)};
                        found = true;
                        break;
                    }
            if (!found) continue;
            ctx.reps[{i1, i2}] = rep;
            long J = std::max<long>(ctx.j_count(i2), 1);
            ctx.zstar[{i1, i2}] = cusp_expansion(ctx, rep.h, rep.k, rep.hp, static_cast<int>(J)).a;
            Complex z0(1);
            Complex tau = (Complex(Real(rep.h)) + cI()) / Complex(Real(rep.k));
            ctx.alpha_prime[{i1, i2}] = Z_eval(ctx, tau) / rhs_without_alpha_prime(ctx, rep.h, rep.k, rep.hp, z0);
        }
    return ctx;
}

Complex transformation_rhs(const ExactFormulaContext& ctx, long h, long k, const Complex& z) {
    PrecisionScope scope(ctx.precision_bits);
    long hp = hprime(h, k, ctx.L);
    auto it = ctx.alpha_prime.find({mod_l(h, ctx.L), mod_l(k, ctx.L)});
    if (it == ctx.alpha_prime.end()) throw ValidationError("transformation_rhs: class without representative");
    return it->second * rhs_without_alpha_prime(ctx, h, k, hp, z);
}

Real transformation_rel_error(const ExactFormulaContext& ctx, long h, long k, const Complex& z) {
    PrecisionScope scope(ctx.precision_bits);
    Complex tau = (Complex(Real(h)) + cI() * z) / Complex(Real(k));
    Complex lhs = Z_eval(ctx, tau);
    Complex rhs = transformation_rhs(ctx, h, k, z);
    return abs(lhs - rhs) / abs(lhs);
}

Complex kloosterman_B(long k, long j, long L, long iota1, long n, const ExactFormulaContext& ctx) {
    if (k < 1) throw ValidationError("kloosterman_B: k < 1");
    PrecisionScope scope(ctx.precision_bits);
    Complex acc(0);
    for (long h = 0; h < k; ++h) {
        if (gcd_l(h, k) != 1 || mod_l(h - iota1, L) != 0) continue;
        long hp = hprime(h, k, ctx.L);
        Rational ph = Rational(-n * h, k) + Rational(hp * j, k * L);
        acc += omega_ctx(ctx, h, k) * expi2pi(ph);
    }
    return acc;
}

Real bessel_I(const Real& v, const Real& s, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    if (s < 0) throw DomainError("bessel_I: negative argument");
    return boost::math::cyl_bessel_i(Real(v), Real(s));
}

namespace {

// A^{(G-1)/2} B^{(1-G)/2} I_{1-G}(2 sqrt(AB)), continued to A <= 0 as an entire function of A.
Real i_star_value(const Real& A, const Real& B, const Real& G, unsigned bits) {
    Real v = 1 - G;
    if (A == 0) return boost::multiprecision::pow(B, v) / boost::math::tgamma(v + 1);
    if (A > 0)
        return boost::multiprecision::pow(A, (G - 1) / 2) * boost::multiprecision::pow(B, v / 2) *
               bessel_I(v, 2 * boost::multiprecision::sqrt(A * B), bits);
    Real w = -A * B;
    return boost::multiprecision::pow(B, v) * boost::multiprecision::pow(w, -v / 2) *
           boost::math::cyl_bessel_j(v, 2 * boost::multiprecision::sqrt(w));
}

}  // namespace

Real I_star(const ExactFormulaContext& ctx, long iota2, long j, long k, long n) {
    PrecisionScope scope(ctx.precision_bits);
    Rational mu = ctx.H.at(mod_l(iota2, ctx.L)) + Rational(j, ctx.L);
    if (mu >= 0) throw NonpositiveCuspWeight();
    Real A = 2 * pi() * n - pi() * Real(ctx.chi) / 12;
    Real B = -2 * pi() * to_real(mu) / (Real(k) * k);
    return i_star_value(A, B, to_real(ctx.G), ctx.precision_bits);
}

Complex xi_truncated(const ExactFormulaContext& ctx, long n, long N_cutoff, const XiOptions& opt) {
    if (ctx.chi < 0 || ctx.chi < ctx.sigma) throw HypothesisViolation("need chi >= 0 and chi >= sigma");
    if (N_cutoff < 1) throw ValidationError("xi_truncated: cutoff must be positive");
    PrecisionScope scope(ctx.precision_bits);
    const long L = ctx.L;
    const Real G = to_real(ctx.G);
    // per k: contributions keyed by (iota1, j)
    using Bucket = std::map<std::pair<long, long>, Complex>;
    auto per_k = parallel_map<Bucket>(static_cast<std::size_t>(N_cutoff), opt.threads, [&](std::size_t idx) {
        long k = static_cast<long>(idx) + 1;
        long i2 = mod_l(k, L);
        long J = ctx.j_count(i2);
        if (opt.policy == JPolicy::LeadingOnly) J = std::min<long>(J, 1);
        Bucket out;
        if (J == 0 && opt.skip_noncontributing) return out;
        std::vector<Real> istar;
        for (long j = 0; j < J; ++j) istar.push_back(I_star(ctx, i2, j, k, n));
        Real kpow = boost::multiprecision::pow(Real(k), -G);
        for (long h = 0; h < k; ++h) {
            if (gcd_l(h, k) != 1) continue;
            long i1 = mod_l(h, L);
            auto ap = ctx.alpha_prime.find({i1, i2});
            if (ap == ctx.alpha_prime.end()) throw std::logic_error("missing class constant");
            const auto& a = ctx.zstar.at({i1, i2});
            long hp = hprime(h, k, L);
            Complex w = omega_ctx(ctx, h, k);
            for (long j = 0; j < J; ++j) {
                Complex b = w * expi2pi(Rational(-n * h, k) + Rational(hp * j, k * L));
                Complex t = ap->second * a[j] * b * (kpow * istar[j]);
                auto [it, fresh] = out.emplace(std::make_pair(i1, j), t);
                if (!fresh) it->second += t;
            }
        }
        return out;
    });
    Complex pref = Complex(2 * pi()) * ctx.alpha;
    Complex total(0);
    for (long i1 = 0; i1 < L; ++i1)
        for (long i2 = 0; i2 < L; ++i2)
            for (long j = 0;; ++j) {
                bool any = false;
                for (long k = (i2 == 0 ? L : i2); k <= N_cutoff; k += L) {
                    const auto& bucket = per_k[static_cast<std::size_t>(k - 1)];
                    auto it = bucket.find({i1, j});
                    if (it == bucket.end()) continue;
                    any = true;
                    Complex term = pref * it->second;
                    total += term;
                    if (opt.trace) opt.trace->push_back({i1, i2, j, k, term});
                }
                if (!any && j >= ctx.j_count(i2)) break;
            }
    return total;
}

}  // namespace qc
