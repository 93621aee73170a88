#include "qcircle/dedekind.hpp"

#include "qcircle/errors.hpp"

namespace qc {

Rational P1(const Rational& x) { return frac(x) - Rational(1, 2); }

Rational P2(const Rational& x) {
    Rational f = frac(x);
    return f * f - f + Rational(1, 6);
}

Real P1(const Real& x) { return frac(x) - Real(0.5); }

Real P2(const Real& x) {
    Real f = frac(x);
    return f * f - f + Real(1) / 6;
}

Rational sawtooth(const Rational& x) {
    if (denominator(x) == 1) return 0;
    return P1(x);
}

EtaTriple EtaTriple::canonical() const {
    if (N < 1) throw ValidationError("EtaTriple: N < 1");
    return {mod_l(u, N), mod_l(v, N), N};
}

Complex alpha_N(long u, long v, long N) {
    if (mod_l(u, N) == 0 && mod_l(v, N) != 0) {
        Rational x(v, N);
        Complex one_minus = Complex(1) - expi2pi(Rational(-v, N));
        return one_minus * expi2pi(P1(x) / 2);
    }
    return Complex(1);
}

EtaExpansion eta_q_expansion(int N_trunc) {
    if (N_trunc < 0) throw ValidationError("eta_q_expansion: negative order");
    IntQSeries s = IntQSeries::identity(N_trunc);
    for (int m = 1; m <= N_trunc; ++m) mul_binomial_pow(s, BigInt(1), m, 1);
    return {s, Rational(1, 24)};
}

namespace {

// s *= (1 - c q^idx) on a dense complex grid.
void mul_linear(std::vector<Complex>& s, const Complex& c, int idx) {
    for (int i = static_cast<int>(s.size()) - 1; i >= idx; --i) s[i] -= c * s[i - idx];
}

}  // namespace

ComplexQSeries gen_eta_q_expansion(const EtaTriple& t0, int N_trunc, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    EtaTriple t = t0.canonical();
    ComplexQSeries out;
    out.step = Rational(1, t.N);
    out.offset = P2(Rational(t.u, t.N)) / 2;
    out.coeffs.assign(static_cast<std::size_t>(N_trunc) + 1, Complex(0));
    out.coeffs[0] = Complex(1);
    Complex z = expi2pi(Rational(t.v, t.N));
    Complex zi = expi2pi(Rational(-t.v, t.N));
    for (int m = 1; m <= N_trunc; ++m) {
        if (mod_l(m - t.u, t.N) == 0) mul_linear(out.coeffs, z, m);
        if (mod_l(m + t.u, t.N) == 0) mul_linear(out.coeffs, zi, m);
    }
    Complex a = alpha_N(t.u, t.v, t.N);
    for (auto& c : out.coeffs) c *= a;
    return out;
}

namespace {

Complex eta_product(const Complex& tau, unsigned precision_bits) {
    Complex q = exp(Complex(0, 2 * pi()) * tau);
    Complex lead = exp(Complex(0, 2 * pi()) * tau * (Real(1) / 24));
    Real eps = boost::multiprecision::pow(Real(2), -static_cast<int>(precision_bits) - 16);
    Complex qn(1), prod(1);
    for (;;) {
        qn *= q;
        prod *= Complex(1) - qn;
        if (abs(qn) < eps) break;
    }
    return lead * prod;
}

}  // namespace

Complex eta_eval(const Complex& tau_in, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    if (tau_in.im <= 0) throw DomainError("eta_eval: Im tau must be positive");
    Complex tau(Real(tau_in.re), Real(tau_in.im));
    Complex factor(1);
    for (int iter = 0; iter < 10000; ++iter) {
        Real n = boost::multiprecision::round(tau.re);
        if (n != 0) {
            // eta(tau) = e(n/24) eta(tau - n)
            factor *= expi2pi(n / 24);
            tau.re -= n;
        }
        if (norm2(tau) >= Real(0.999)) break;
        // eta(tau) = eta(-1/tau) / sqrt(-i tau)
        factor /= sqrt(Complex(tau.im, -tau.re));
        tau = Complex(-1) / tau;
    }
    return factor * eta_product(tau, precision_bits);
}

Complex gen_eta_eval(const EtaTriple& t0, const Complex& tau, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    EtaTriple t = t0.canonical();
    if (tau.im <= 0) throw DomainError("gen_eta_eval: Im tau must be positive");
    Complex two_pi_i(0, 2 * pi());
    Complex qN = exp(two_pi_i * tau / Complex(Real(t.N)));
    Complex val = alpha_N(t.u, t.v, t.N) * exp(two_pi_i * tau * (to_real(P2(Rational(t.u, t.N))) / 2));
    Complex z = expi2pi(Rational(t.v, t.N));
    Complex zi = expi2pi(Rational(-t.v, t.N));
    Real eps = boost::multiprecision::pow(Real(2), -static_cast<int>(precision_bits) - 16);
    Complex qm(1);
    for (long m = 1;; ++m) {
        qm *= qN;
        if (mod_l(m - t.u, t.N) == 0) val *= Complex(1) - z * qm;
        if (mod_l(m + t.u, t.N) == 0) val *= Complex(1) - zi * qm;
        if (abs(qm) < eps) break;
    }
    return val;
}

namespace {

// Exact sum_{lambda=1}^{k-1} ((lambda/k)) ((h lambda/k + a/b)) over the common denominator 4 k^2 b.
Rational dedekind_core(long h, long k, long a, long b) {
    if (k < 1) throw ValidationError("dedekind sum: k < 1");
    if (gcd_l(mod_l(h, k), k) != 1 && k != 1) throw ValidationError("dedekind sum: gcd(h,k) != 1");
    __int128 kb = static_cast<__int128>(k) * b;
    __int128 acc = 0;
    for (long lam = 1; lam < k; ++lam) {
        __int128 num = static_cast<__int128>(h) * lam * b + static_cast<__int128>(a) * k;
        __int128 m = num % kb;
        if (m < 0) m += kb;
        if (m == 0) continue;
        acc += static_cast<__int128>(2 * lam - k) * (2 * m - kb);
    }
    BigInt num = static_cast<long long>(acc / (static_cast<__int128>(1) << 62));
    num <<= 62;
    num += static_cast<long long>(acc % (static_cast<__int128>(1) << 62));
    BigInt den = BigInt(4) * k * k * b;
    return Rational(num, den);
}

}  // namespace

Rational dedekind_sum(long h, long k) { return dedekind_core(h, k, 0, 1); }

Rational gen_dedekind_sum(long r, long l, long h, long k) {
    if (l < 1) throw ValidationError("gen_dedekind_sum: l < 1");
    return dedekind_core(h, k, mod_l(r, l), l);
}

Rational gen_dedekind_sum(const Rational& theta, long h, long k) {
    Rational f = frac(theta);
    return dedekind_core(h, k, numerator(f).convert_to<long>(), denominator(f).convert_to<long>());
}

Complex omega(long h, long k, long chi, long sigma, long r, long l, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    Rational x = (Rational(chi - sigma) * dedekind_sum(h, k) + Rational(chi + sigma) * gen_dedekind_sum(r, l, h, k)) / 4;
    return expi2pi(x);
}

}  // namespace qc
