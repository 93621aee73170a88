#pragma once

#include "qcircle/numeric.hpp"
#include "qcircle/series.hpp"

#include <array>
#include <vector>

namespace qc {

struct BQF {
    long a = 1, b = 0, c = 1;
    long disc() const { return b * b - 4 * a * c; }
    bool operator==(const BQF& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Q o M, i.e. (x, y) -> Q(p x + q y, r x + s y) for M = [[p, q], [r, s]].
BQF act(const BQF& Q, long p, long q, long r, long s);

struct Reduction {
    BQF reduced;
    std::array<long, 4> M;  // Q = reduced o M
};
Reduction reduce_form(const BQF& Q);

// Primitive reduced forms of discriminant D < 0.
std::vector<BQF> reduced_forms(long D, bool primitive_only = true);
long class_number(long D);

// Key identifying the Gamma_0(6)-class of a form of discriminant < -4.
std::array<long, 5> gamma0_6_key(const BQF& Q);

std::vector<BQF> enumerate_Qn(long n);

Complex cm_point(const BQF& Q, unsigned precision_bits);

// Coefficients of q F(tau), i.e. entry i multiplies q^{i-1}.
IntQSeries F_expansion(int N_trunc);
IntQSeries E2_expansion(int step, int N_trunc);

Complex P_maass_eval(const Complex& tau, int N_trunc, unsigned precision_bits);
Complex P_maass_eval(const Complex& tau, const IntQSeries& F, unsigned precision_bits);

struct TraceTerm {
    BQF Q;
    Complex value;
};

struct TraceResult {
    long n = 0;
    Complex total;
    Real p_estimate;
    int N_trunc = 0;
    std::vector<TraceTerm> terms;
};

TraceResult trace(long n, unsigned precision_bits = 256, unsigned threads = 1);

}  // namespace qc
