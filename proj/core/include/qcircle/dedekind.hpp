#pragma once

#include "qcircle/numeric.hpp"
#include "qcircle/series.hpp"

namespace qc {

Rational P1(const Rational& x);
Rational P2(const Rational& x);
Real P1(const Real& x);
Real P2(const Real& x);
// ((x)): P1(x) off the integers, 0 on them.
Rational sawtooth(const Rational& x);

struct EtaTriple {
    long u = 0;
    long v = 0;
    long N = 1;

    EtaTriple canonical() const;
};

Complex alpha_N(long u, long v, long N);

struct EtaExpansion {
    IntQSeries series;  // coefficients of prod (1 - q^n)
    Rational offset;    // 1/24
};
EtaExpansion eta_q_expansion(int N_trunc);

// alpha_N(u,v) e^{pi i P2(u/N) tau} prod(...) prod(...) as a series in q^{1/N};
// `N_trunc` counts grid steps of size 1/N.
ComplexQSeries gen_eta_q_expansion(const EtaTriple& t, int N_trunc, unsigned precision_bits);

// Classical Dedekind eta at tau, reduced to the fundamental domain first.
Complex eta_eval(const Complex& tau, unsigned precision_bits);
// eta_{(u,v,N)}(tau) by its product.
Complex gen_eta_eval(const EtaTriple& t, const Complex& tau, unsigned precision_bits);

Rational dedekind_sum(long h, long k);
Rational gen_dedekind_sum(long r, long l, long h, long k);
// sum_{lambda mod k} ((lambda/k)) ((h lambda/k + theta))
Rational gen_dedekind_sum(const Rational& theta, long h, long k);

// Multiplier of the single-factor specialization:
// exp(pi i/2 ((chi - sigma) s(h,k) + (chi + sigma) s_{(r,l)}(h,k))).
Complex omega(long h, long k, long chi, long sigma, long r, long l, unsigned precision_bits);

}  // namespace qc
