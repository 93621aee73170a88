#include "qcircle/partitions.hpp"

#include "qcircle/dedekind.hpp"
#include "qcircle/errors.hpp"
#include "qcircle/parallel.hpp"
#include "qcircle/series.hpp"

#include <cmath>

namespace qc {

PartitionTable p_recurrence(int N) {
    if (N < 0) throw ValidationError("p_recurrence: N < 0");
    PartitionTable t;
    t.values.assign(static_cast<std::size_t>(N) + 1, 0);
    t.values[0] = 1;
    for (int n = 1; n <= N; ++n) {
        BigInt acc = 0;
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2;
            if (g1 > n) break;
            int sign = (j % 2) ? 1 : -1;
            if (sign > 0)
                acc += t.values[n - g1];
            else
                acc -= t.values[n - g1];
            long g2 = j * (3 * j + 1) / 2;
            if (g2 <= n) {
                if (sign > 0)
                    acc += t.values[n - g2];
                else
                    acc -= t.values[n - g2];
            }
        }
        t.values[n] = acc;
    }
    return t;
}

PartitionTable p_euler_product(int N) {
    if (N < 0) throw ValidationError("p_euler_product: N < 0");
    IntQSeries s = IntQSeries::identity(N);
    for (int m = 1; m <= N; ++m) mul_binomial_pow(s, BigInt(1), m, -1);
    return PartitionTable{s.coeffs()};
}

std::vector<CongruenceViolation> check_ramanujan_congruences(int N) {
    if (N < 6) throw ValidationError("check_ramanujan_congruences: N < 6");
    PartitionTable t = p_recurrence(N);
    std::vector<CongruenceViolation> bad;
    const int rules[3][2] = {{5, 4}, {7, 5}, {11, 6}};
    for (const auto& r : rules)
        for (int m = r[1]; m <= N; m += r[0])
            if (t.values[m] % r[0] != 0) bad.push_back({r[0], m});
    return bad;
}

int kronecker(long a, long n) {
    static const int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a % 2 == 0) && (n % 2 == 0)) return 0;
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    int k = (v % 2 == 0) ? 1 : tab2[a & 7];
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    for (;;) {
        if (a == 0) return n > 1 ? 0 : k;
        v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2) k *= tab2[n & 7];
        if (a & n & 2) k = -k;
        long r = a < 0 ? -a : a;
        a = n % r;
        n = r;
    }
}

Complex kloosterman_A_complex(long k, long n, unsigned precision_bits) {
    if (k < 1) throw ValidationError("kloosterman_A: k < 1");
    PrecisionScope scope(precision_bits);
    long M = 24 * k;
    long target = mod_l(1 - 24 * n, M);
    Complex acc(0);
    for (long d = 0; d < M; ++d) {
        __int128 dd = static_cast<__int128>(d) * d;
        if (static_cast<long>(dd % M) != target) continue;
        int chi = kronecker(12, d);
        if (chi == 0) continue;
        Complex w = expi2pi(Rational(d, 12 * k));
        if (chi > 0)
            acc += w;
        else
            acc -= w;
    }
    Real scale = boost::multiprecision::sqrt(Real(k) / 12) / 2;
    return acc * scale;
}

Real kloosterman_A(long k, long n, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    Complex a = kloosterman_A_complex(k, n, precision_bits);
    Real tol = boost::multiprecision::pow(Real(2), -static_cast<int>(precision_bits / 2));
    if (boost::multiprecision::abs(a.im) > tol)
        throw NumericError("kloosterman_A: imaginary part not negligible");
    return a.re;
}

Real bessel_I_three_halves(const Real& x) {
    Real c = boost::multiprecision::cosh(x), s = boost::multiprecision::sinh(x);
    return boost::multiprecision::sqrt(2 / (pi() * x)) * (c - s / x);
}

unsigned rademacher_bits(long n) {
    double b = M_PI * std::sqrt(2.0 * static_cast<double>(n) / 3.0) / std::log(2.0);
    return static_cast<unsigned>(std::ceil(b)) + 64;
}

double rademacher_tail_bound(long n, long K) {
    double m = 24.0 * n - 1;
    double pre = 2 * M_PI * std::pow(m, -0.75);
    auto i32 = [](double x) {
        if (x < 1e-3) return std::pow(x, 1.5) * std::sqrt(2 / M_PI) / 3;
        return std::sqrt(2 / (M_PI * x)) * (std::cosh(x) - std::sinh(x) / x);
    };
    double sum = 0;
    long stop = K + 200000;
    for (long k = K + 1; k <= stop; ++k) {
        double x = M_PI * std::sqrt(m) / (6.0 * k);
        sum += pre / k * i32(x);
    }
    // Remainder beyond `stop` from the small-argument behavior I_{3/2}(x) ~ x^{3/2} sqrt(2/pi)/3.
    double c = pre * std::pow(M_PI * std::sqrt(m) / 6.0, 1.5) * std::sqrt(2 / M_PI) / 3;
    sum += c * (2.0 / 3.0) * std::pow(static_cast<double>(stop), -1.5) * 1.01;
    return sum;
}

RademacherResult rademacher_p(long n, long K_max, unsigned precision_bits, unsigned threads) {
    if (n < 1 || K_max < 1) throw ValidationError("rademacher_p: need n >= 1 and K_max >= 1");
    unsigned need = rademacher_bits(n);
    if (precision_bits == 0) precision_bits = need;
    if (precision_bits < need)
        throw InsufficientPrecision("rademacher_p needs at least " + std::to_string(need) + " bits");
    PrecisionScope scope(precision_bits);
    RademacherResult res;
    res.precision_bits = precision_bits;
    Real m = Real(24 * n - 1);
    Real pre = 2 * pi() * boost::multiprecision::pow(m, Real(-0.75));
    Real sq = boost::multiprecision::sqrt(m);
    res.terms = parallel_map<RademacherTerm>(static_cast<std::size_t>(K_max), threads, [&](std::size_t i) {
        long k = static_cast<long>(i) + 1;
        RademacherTerm t;
        t.k = k;
        t.A_k = kloosterman_A(k, n, precision_bits);
        t.bessel_arg = pi() * sq / (6 * k);
        t.term_value = pre * t.A_k / k * bessel_I_three_halves(t.bessel_arg);
        return t;
    });
    res.approx = 0;
    for (const auto& t : res.terms) res.approx += t.term_value;
    res.tail_bound = rademacher_tail_bound(n, K_max);
    if (res.tail_bound > 0.25)
        throw InsufficientPrecision("rademacher tail bound " + std::to_string(res.tail_bound) + " exceeds 0.25");
    res.rounded = round_to_int(res.approx);
    return res;
}

Real rademacher_main_term(long n, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    Real m = Real(24 * n - 1);
    Real pre = 2 * pi() * boost::multiprecision::pow(m, Real(-0.75));
    return pre * bessel_I_three_halves(pi() * boost::multiprecision::sqrt(m) / 6);
}

Real hardy_ramanujan_leading(long n, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    Real x = pi() * boost::multiprecision::sqrt(Real(2 * n) / 3);
    return boost::multiprecision::exp(x) / (4 * Real(n) * boost::multiprecision::sqrt(Real(3)));
}

Real eval_P_near_root(long h, long k, const Real& t_in, unsigned precision_bits) {
    if (k < 1 || gcd_l(h, k) != 1) throw ValidationError("eval_P_near_root: need gcd(h,k)=1");
    PrecisionScope scope(precision_bits);
    Real t = t_in;
    if (t <= 0) throw ValidationError("eval_P_near_root: t must be positive");
    if (t >= Real(0.05)) {
        Complex q = expi2pi(Rational(h, k)) * boost::multiprecision::exp(-t);
        Complex qn(1), prod(1);
        Real eps = boost::multiprecision::pow(Real(2), -static_cast<int>(precision_bits) - 16);
        for (long n = 1;; ++n) {
            qn *= q;
            prod *= Complex(1) - qn;
            if (abs(qn) < eps) break;
        }
        return 1 / abs(prod);
    }
    // P(q) = q^{1/24} / eta(tau), tau = h/k + i t / (2 pi).
    Complex tau(to_real(Rational(h, k)), t / (2 * pi()));
    Real lead = boost::multiprecision::exp(-t / 24);
    return lead / abs(eta_eval(tau, precision_bits));
}

}  // namespace qc
