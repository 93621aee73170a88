#pragma once

#include "qcircle/numeric.hpp"

#include <vector>

namespace qc {

struct PartitionTable {
    std::vector<BigInt> values;  // p(0..N)
};

PartitionTable p_recurrence(int N);
PartitionTable p_euler_product(int N);

struct CongruenceViolation {
    int modulus;
    int argument;  // m with p(m) not divisible by modulus
};

// Checks p(5n+4), p(7n+5), p(11n+6) for every argument <= N.
std::vector<CongruenceViolation> check_ramanujan_congruences(int N);

// Kronecker symbol (a/n).
int kronecker(long a, long n);

Complex kloosterman_A_complex(long k, long n, unsigned precision_bits);
Real kloosterman_A(long k, long n, unsigned precision_bits);

struct RademacherTerm {
    long k;
    Real A_k;
    Real bessel_arg;
    Real term_value;
};

struct RademacherResult {
    Real approx;
    BigInt rounded;
    double tail_bound;
    unsigned precision_bits;
    std::vector<RademacherTerm> terms;
};

unsigned rademacher_bits(long n);
// Heuristic tail estimate used to gate rounding.
double rademacher_tail_bound(long n, long K);
// precision_bits = 0 selects rademacher_bits(n).
RademacherResult rademacher_p(long n, long K_max, unsigned precision_bits = 0, unsigned threads = 1);
Real rademacher_main_term(long n, unsigned precision_bits);
Real hardy_ramanujan_leading(long n, unsigned precision_bits);

Real bessel_I_three_halves(const Real& x);

// |P(zeta e^{-t})| with zeta = e(h/k).
Real eval_P_near_root(long h, long k, const Real& t, unsigned precision_bits);

}  // namespace qc
