#pragma once

#include "qcircle/goettsche.hpp"
#include "qcircle/numeric.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace qc {

// One factor prod_n (1 - e(theta) q^n)(1 - e(-theta) q^n) raised to `e`, theta not an integer.
struct PairFactor {
    Rational theta;  // in (0,1)
    long e;
};

struct ClassRep {
    long h = 0;
    long k = 1;
    long hp = 0;
};

struct ExactFormulaContext {
    HodgeDiamond surface;
    long r1 = 0, l1 = 1, r2 = 0, l2 = 1;
    long L = 1;
    long chi = 0, sigma = 0;
    std::vector<PairFactor> pairs;
    long E = 0;  // exponent of prod (1 - q^n)
    Rational G;  // modular weight E/2
    Complex alpha;
    std::map<long, Rational> H;                             // iota2 -> cusp order
    std::map<std::pair<long, long>, Complex> alpha_prime;   // (iota1, iota2)
    std::map<std::pair<long, long>, std::vector<Complex>> zstar;  // a_j
    std::map<std::pair<long, long>, ClassRep> reps;
    unsigned precision_bits = 192;

    // Largest j used for (iota1, iota2): j < -L H(iota2).
    long j_count(long iota2) const;
};

Rational weight_G(const HodgeDiamond& S);
Rational cusp_order_H(const HodgeDiamond& S, long r1, long l1, long r2, long l2, long iota2);

// h' with h h' = -1 mod kL when solvable, else the class-consistent fallback mod lcm(k, L).
long hprime(long h, long k, long L);

ExactFormulaContext make_context(const HodgeDiamond& S, long r1, long l1, long r2, long l2,
                                 unsigned precision_bits = 192);

// Cusp expansion at h/k derived from the eta and theta transformation laws:
// Z((h+iz)/k) = C z^{-G} exp(-2 pi chi z/(24k)) e(H tau') sum_j a_j e(j tau'/L), tau' = (h'+i/z)/k.
struct CuspExpansion {
    Complex C;
    Rational H;
    std::vector<Complex> a;
};
CuspExpansion cusp_expansion(const ExactFormulaContext& ctx, long h, long k, long hp, int J);

std::vector<Complex> zstar_coeffs(const ExactFormulaContext& ctx, long iota1, long iota2, int J_max);

// exp(pi i (-E s(h,k) - 2 sum e_i s_{theta_i}(h,k)))
Complex omega_ctx(const ExactFormulaContext& ctx, long h, long k);

// Z_S(e(theta_x), e(theta_y); tau) from the Goettsche product.
Complex Z_eval(const ExactFormulaContext& ctx, const Complex& tau);
// Z*(tau') for the class of (h,k) with the given h'.
Complex Zstar_eval(const ExactFormulaContext& ctx, long k, long hp, const Complex& taup);

// Right side of the transformation law at (h, k, z) using the pinned alpha'.
Complex transformation_rhs(const ExactFormulaContext& ctx, long h, long k, const Complex& z);
Real transformation_rel_error(const ExactFormulaContext& ctx, long h, long k, const Complex& z);

Complex kloosterman_B(long k, long j, long L, long iota1, long n, const ExactFormulaContext& ctx);

Real bessel_I(const Real& v, const Real& s, unsigned precision_bits);
Real I_star(const ExactFormulaContext& ctx, long iota2, long j, long k, long n);

enum class JPolicy { Full, LeadingOnly };

struct XiTraceRecord {
    long iota1, iota2, j, k;
    Complex term;
};

struct XiOptions {
    JPolicy policy = JPolicy::Full;
    unsigned threads = 1;
    bool skip_noncontributing = true;
    std::vector<XiTraceRecord>* trace = nullptr;
};

Complex xi_truncated(const ExactFormulaContext& ctx, long n, long N_cutoff, const XiOptions& opt = {});

}  // namespace qc
