#include "qcircle/maass_trace.hpp"

#include "qcircle/errors.hpp"
#include "qcircle/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

namespace qc {

BQF act(const BQF& Q, long p, long q, long r, long s) {
    BQF o;
    o.a = Q.a * p * p + Q.b * p * r + Q.c * r * r;
    o.b = 2 * Q.a * p * q + Q.b * (p * s + q * r) + 2 * Q.c * r * s;
    o.c = Q.a * q * q + Q.b * q * s + Q.c * s * s;
    return o;
}

namespace {

std::array<long, 4> matmul(const std::array<long, 4>& x, const std::array<long, 4>& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Reduction reduce_form(const BQF& Q0) {
    if (Q0.disc() >= 0 || Q0.a <= 0) throw ValidationError("reduce_form: need a positive definite form");
    BQF Q = Q0;
    std::array<long, 4> R = {1, 0, 0, 1};  // reduced = Q0 o R
    for (;;) {
        if (Q.b > Q.a || Q.b <= -Q.a) {
            long t = floor_div(Q.a - Q.b, 2 * Q.a);
            Q = act(Q, 1, t, 0, 1);
            R = matmul(R, {1, t, 0, 1});
            continue;
        }
        if (Q.c < Q.a) {
            Q = act(Q, 0, -1, 1, 0);
            R = matmul(R, {0, -1, 1, 0});
            continue;
        }
        if (Q.c == Q.a && Q.b < 0) {
            Q = act(Q, 0, -1, 1, 0);
            R = matmul(R, {0, -1, 1, 0});
            continue;
        }
        break;
    }
    // Q0 = Q o R^{-1}
    return {Q, {R[3], -R[1], -R[2], R[0]}};
}

std::vector<BQF> reduced_forms(long D, bool primitive_only) {
    if (D >= 0) throw ValidationError("reduced_forms: need D < 0");
    std::vector<BQF> out;
    for (long a = 1; 3 * a * a <= -D; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - D;
            if (num % (4 * a)) continue;
            long c = num / (4 * a);
            if (c < a || (c == a && b < 0)) continue;
            if (primitive_only && std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
            out.push_back({a, b, c});
        }
    return out;
}

long class_number(long D) { return static_cast<long>(reduced_forms(D, true).size()); }

std::array<long, 5> gamma0_6_key(const BQF& Q) {
    Reduction red = reduce_form(Q);
    // The left coset M Gamma_0(6) is fixed by the first column of M in P^1(Z/6).
    long u = mod_l(red.M[0], 6), v = mod_l(red.M[2], 6);
    long u2 = mod_l(-u, 6), v2 = mod_l(-v, 6);
    if (std::make_pair(u2, v2) < std::make_pair(u, v)) {
        u = u2;
        v = v2;
    }
    return {red.reduced.a, red.reduced.b, red.reduced.c, u, v};
}

namespace {

// x with a x + b y = g
long ext_gcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::labs(a);
    }
    long x1, y1;
    long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

std::vector<BQF> enumerate_Qn(long n) {
    if (n < 1) throw ValidationError("enumerate_Qn: n >= 1 required");
    long D = 1 - 24 * n;
    const long bound = 50;
    std::vector<BQF> out;
    std::map<std::array<long, 5>, BQF> seen;
    for (const BQF& Q0 : reduced_forms(D, false)) {
        std::optional<BQF> best;
        for (long p = -bound; p <= bound; ++p)
            for (long r = -bound; r <= bound; ++r) {
                if (std::gcd(p, r) != 1) continue;
                long a = Q0.a * p * p + Q0.b * p * r + Q0.c * r * r;
                if (a % 6) continue;
                if (best && a >= best->a) continue;
                long s, q;
                ext_gcd(p, r, s, q);  // p s + r q = 1, so det [[p, -q], [r, s]] = 1
                if (p * s + r * q != 1) {
                    s = -s;
                    q = -q;
                }
                BQF Q = act(Q0, p, -q, r, s);
                if (mod_l(Q.b, 12) != 1) continue;
                long t = floor_div(Q.a - Q.b, 2 * Q.a);
                Q = act(Q, 1, t, 0, 1);
                best = Q;
            }
        if (!best) throw ConvergenceFailure("no Gamma_0(6) lift found within the search bound");
        auto key = gamma0_6_key(*best);
        if (seen.count(key)) continue;
        seen[key] = *best;
        out.push_back(*best);
    }
    return out;
}

Complex cm_point(const BQF& Q, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    Real two_a = Real(2 * Q.a);
    return Complex(Real(-Q.b) / two_a, boost::multiprecision::sqrt(Real(-Q.disc())) / two_a);
}

IntQSeries E2_expansion(int step, int N) {
    IntQSeries s(N);
    s[0] = 1;
    for (int m = 1; m * step <= N; ++m) {
        long sig = 0;
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) sig += d;
        s[m * step] = -24 * BigInt(sig);
    }
    return s;
}

IntQSeries F_expansion(int N_trunc) {
    if (N_trunc < 0) throw ValidationError("F_expansion: negative order");
    int M = N_trunc + 1;  // index i is q^{i-1}
    IntQSeries num = E2_expansion(1, M);
    IntQSeries e2 = E2_expansion(2, M), e3 = E2_expansion(3, M), e6 = E2_expansion(6, M);
    for (int i = 0; i <= M; ++i) num[i] = num[i] - 2 * e2[i] - 3 * e3[i] + 6 * e6[i];
    IntQSeries den = IntQSeries::identity(M);
    for (int d : {1, 2, 3, 6})
        for (int m = 1; m * d <= M; ++m) mul_binomial_pow(den, BigInt(1), m * d, 2);
    IntQSeries f = series_mul(num, series_inverse(den));
    for (int i = 0; i <= M; ++i) {
        if (f[i] % 2 != 0) throw std::logic_error("F_expansion: odd numerator coefficient");
        f[i] /= 2;
    }
    return f;
}

Complex P_maass_eval(const Complex& tau, const IntQSeries& F, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    if (tau.im <= 0) throw DomainError("P_maass_eval: Im tau must be positive");
    Real y = tau.im;
    Real corr = 1 / (2 * pi() * y);
    Complex q = exp(Complex(Real(0), 2 * pi()) * tau);
    Complex qm = Complex(1) / q;
    Complex acc(0);
    Real tail(0);
    int M = F.order();
    for (int i = 0; i <= M; ++i) {
        long m = i - 1;
        Complex term = qm * (to_real(F[i]) * (Real(m) + corr));
        acc -= term;
        if (i > M - 8) tail = std::max(tail, abs(term));
        qm *= q;
    }
    Real tol = boost::multiprecision::pow(Real(2), -static_cast<int>(precision_bits / 2));
    if (tail > tol * std::max(Real(1), abs(acc))) throw ConvergenceFailure("P_maass_eval: truncation too short");
    return acc;
}

Complex P_maass_eval(const Complex& tau, int N_trunc, unsigned precision_bits) {
    return P_maass_eval(tau, F_expansion(N_trunc), precision_bits);
}

TraceResult trace(long n, unsigned precision_bits, unsigned threads) {
    PrecisionScope scope(precision_bits);
    TraceResult res;
    res.n = n;
    std::vector<BQF> forms = enumerate_Qn(n);
    long a_max = 0;
    for (const auto& Q : forms) a_max = std::max(a_max, Q.a);
    double im_min = std::sqrt(24.0 * n - 1) / (2.0 * a_max);
    int N = static_cast<int>(std::ceil(precision_bits / 2.0 * std::log(2.0) / (2 * M_PI * im_min))) + 8;
    IntQSeries F;
    for (int attempt = 0;; ++attempt) {
        F = F_expansion(N);
        try {
            res.terms = parallel_map<TraceTerm>(forms.size(), threads, [&](std::size_t i) {
                return TraceTerm{forms[i], P_maass_eval(cm_point(forms[i], precision_bits), F, precision_bits)};
            });
            break;
        } catch (const ConvergenceFailure&) {
            if (attempt >= 5) throw;
            N *= 2;
        }
    }
    res.N_trunc = N;
    res.total = Complex(0);
    for (const auto& t : res.terms) res.total += t.value;
    if (boost::multiprecision::abs(res.total.im) > Real(1e-6)) throw NumericError("trace: imaginary part not negligible");
    res.p_estimate = res.total.re / (24 * n - 1);
    return res;
}

}  // namespace qc
