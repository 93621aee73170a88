#pragma once

#include "qcircle/numeric.hpp"
#include "qcircle/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qc {

struct HodgeDiamond {
    long h[3][3] = {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}};
    std::string name;

    static HodgeDiamond from_triple(long h10, long h20, long h11, std::string name = {});
    long h10() const { return h[1][0]; }
    long h20() const { return h[2][0]; }
    long h11() const { return h[1][1]; }
    long chi() const;
    long sigma() const;
};

std::pair<long, long> derive_chi_sigma(long h10, long h20, long h11);

// Entry n is sum (-1)^{s+t} h^{s,t}(Hilb^n) x^{s-n} y^{t-n}.
struct HilbertHodgeTable {
    LaurentQSeries series;
    int order() const { return series.order(); }
    const LaurentPoly& operator[](int n) const { return series[n]; }
};

HilbertHodgeTable goettsche_expand(const HodgeDiamond& S, int N);
// Same product assembled factor by factor from product_factor_pow and series_mul.
HilbertHodgeTable goettsche_expand_naive(const HodgeDiamond& S, int N);

using HodgeNumbers = std::map<std::pair<int, int>, BigInt>;

HodgeNumbers hilbert_hodge_numbers(const HilbertHodgeTable& t, int n);
HodgeNumbers surface_hodge_numbers(const HodgeDiamond& S);
// x^{-d/2} y^{-d/2} sum h^{s,t} (-x)^s (-y)^t
LaurentPoly hodge_polynomial(const HodgeNumbers& h, int d);

LaurentQSeries Z_series(const HodgeDiamond& S, int N);

// x-exponent filtered mod l2, y-exponent mod l1.
BigInt gamma_direct(const HilbertHodgeTable& t, long r1, long l1, long r2, long l2, int n);

// Root-of-unity average; result coefficients are (near-)integers equal to gamma_direct.
ComplexQSeries C_via_roots(const HilbertHodgeTable& t, long r1, long l1, long r2, long l2, int N,
                           unsigned precision_bits);
// All residue pairs at once, indexed [r1][r2].
std::vector<std::vector<ComplexQSeries>> C_via_roots_all(const HilbertHodgeTable& t, long l1, long l2, int N,
                                                         unsigned precision_bits);

}  // namespace qc
