#include "qcircle/goettsche.hpp"

#include "qcircle/errors.hpp"

namespace qc {

HodgeDiamond HodgeDiamond::from_triple(long h10, long h20, long h11, std::string name) {
    if (h10 < 0 || h20 < 0 || h11 < 0) throw ValidationError("Hodge numbers must be nonnegative");
    HodgeDiamond S;
    S.h[0][0] = S.h[2][2] = 1;
    S.h[1][0] = S.h[0][1] = S.h[2][1] = S.h[1][2] = h10;
    S.h[2][0] = S.h[0][2] = h20;
    S.h[1][1] = h11;
    S.name = std::move(name);
    return S;
}

long HodgeDiamond::chi() const {
    long c = 0;
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) c += ((s + t) % 2 ? -1 : 1) * h[s][t];
    return c;
}

long HodgeDiamond::sigma() const { return 2 + 2 * h[2][0] - h[1][1]; }

std::pair<long, long> derive_chi_sigma(long h10, long h20, long h11) {
    if (h10 < 0 || h20 < 0 || h11 < 0) throw ValidationError("Hodge numbers must be nonnegative");
    return {2 - 4 * h10 + 2 * h20 + h11, 2 + 2 * h20 - h11};
}

namespace {

struct Factor {
    int a, b;
    long e;
};

std::vector<Factor> goettsche_factors(const HodgeDiamond& S) {
    std::vector<Factor> f;
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) {
            long h = S.h[s][t];
            if (h == 0) continue;
            // odd s+t in the numerator, even s+t in the denominator
            f.push_back({s - 1, t - 1, ((s + t) % 2) ? h : -h});
        }
    return f;
}

}  // namespace

HilbertHodgeTable goettsche_expand(const HodgeDiamond& S, int N) {
    if (N < 0) throw ValidationError("goettsche_expand: N < 0");
    LaurentQSeries s = LaurentQSeries::identity(N);
    auto fs = goettsche_factors(S);
    for (int m = 1; m <= N; ++m)
        for (const auto& f : fs) mul_binomial_pow(s, f.a, f.b, m, f.e);
    return {s};
}

HilbertHodgeTable goettsche_expand_naive(const HodgeDiamond& S, int N) {
    LaurentQSeries s = LaurentQSeries::identity(N);
    for (int m = 1; m <= N; ++m)
        for (const auto& f : goettsche_factors(S)) s = series_mul(s, product_factor_pow(f.a, f.b, m, f.e, N));
    return {s};
}

HodgeNumbers hilbert_hodge_numbers(const HilbertHodgeTable& t, int n) {
    if (n > t.order()) throw TruncationExceeded("n beyond table order");
    HodgeNumbers h;
    for (const auto& term : t[n].terms()) {
        int s = term.a + n, u = term.b + n;
        h[{s, u}] = ((s + u) % 2) ? BigInt(-term.c) : term.c;
    }
    return h;
}

HodgeNumbers surface_hodge_numbers(const HodgeDiamond& S) {
    HodgeNumbers h;
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t)
            if (S.h[s][t]) h[{s, t}] = S.h[s][t];
    return h;
}

LaurentPoly hodge_polynomial(const HodgeNumbers& h, int d) {
    if (d % 2) throw OddDimension();
    LaurentPoly p;
    for (const auto& [st, v] : h) {
        int s = st.first, t = st.second;
        BigInt c = ((s + t) % 2) ? BigInt(-v) : v;
        p += LaurentPoly::monomial(s - d / 2, t - d / 2, c);
    }
    return p;
}

LaurentQSeries Z_series(const HodgeDiamond& S, int N) {
    HilbertHodgeTable t = goettsche_expand(S, N);
    LaurentQSeries z(N);
    for (int n = 0; n <= N; ++n) z[n] = hodge_polynomial(hilbert_hodge_numbers(t, n), 2 * n);
    return z;
}

BigInt gamma_direct(const HilbertHodgeTable& t, long r1, long l1, long r2, long l2, int n) {
    if (l1 < 1 || l2 < 1) throw ValidationError("gamma_direct: moduli must be positive");
    if (n < 0 || n > t.order()) throw TruncationExceeded("gamma_direct n=" + std::to_string(n));
    BigInt g = 0;
    for (const auto& term : t[n].terms())
        if (mod_l(term.a - r2, l2) == 0 && mod_l(term.b - r1, l1) == 0) g += term.c;
    return g;
}

std::vector<std::vector<ComplexQSeries>> C_via_roots_all(const HilbertHodgeTable& t, long l1, long l2, int N,
                                                         unsigned precision_bits) {
    if (l1 < 1 || l2 < 1) throw ValidationError("C_via_roots: moduli must be positive");
    if (N > t.order()) throw TruncationExceeded("C_via_roots N beyond table order");
    PrecisionScope scope(precision_bits);
    LaurentQSeries trunc(N);
    for (int n = 0; n <= N; ++n) trunc[n] = t[n];
    std::vector<std::vector<ComplexQSeries>> out(l1, std::vector<ComplexQSeries>(l2));
    for (auto& row : out)
        for (auto& c : row) c.coeffs.assign(static_cast<std::size_t>(N) + 1, Complex(0));
    Real scale = Real(1) / (l1 * l2);
    for (long j1 = 0; j1 < l1; ++j1)
        for (long j2 = 0; j2 < l2; ++j2) {
            ComplexQSeries z = specialize(trunc, expi2pi(Rational(j2, l2)), expi2pi(Rational(j1, l1)), precision_bits);
            for (long r1 = 0; r1 < l1; ++r1)
                for (long r2 = 0; r2 < l2; ++r2) {
                    Complex w = expi2pi(Rational(-j2 * r2, l2) + Rational(-j1 * r1, l1)) * scale;
                    for (int n = 0; n <= N; ++n) out[r1][r2].coeffs[n] += w * z.coeffs[n];
                }
        }
    return out;
}

ComplexQSeries C_via_roots(const HilbertHodgeTable& t, long r1, long l1, long r2, long l2, int N,
                           unsigned precision_bits) {
    auto all = C_via_roots_all(t, l1, l2, N, precision_bits);
    return all[mod_l(r1, l1)][mod_l(r2, l2)];
}

}  // namespace qc
