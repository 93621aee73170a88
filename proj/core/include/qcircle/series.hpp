#pragma once

#include "qcircle/errors.hpp"
#include "qcircle/numeric.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace qc {

// Integer Laurent polynomial in x, y. Terms are kept sorted by (a, b) with no zero coefficients.
class LaurentPoly {
public:
    struct Term {
        int a;
        int b;
        BigInt c;
    };

    LaurentPoly() = default;
    LaurentPoly(long c);  // constant
    static LaurentPoly monomial(int a, int b, BigInt c = 1);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    BigInt coeff(int a, int b) const;
    std::map<std::pair<int, int>, BigInt> to_map() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    // this += s * x^da y^db * o
    void add_shifted(const LaurentPoly& o, int da, int db, int sign);

    // Sum of all coefficients (evaluation at x = y = 1).
    BigInt total() const;
    Complex evaluate(const Complex& x, const Complex& y) const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

private:
    std::vector<Term> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<BigInt> {
    static BigInt zero() { return 0; }
    static BigInt one() { return 1; }
    static bool is_zero(const BigInt& c) { return c == 0; }
    static bool is_unit(const BigInt& c) { return c == 1 || c == -1; }
    static BigInt inv_unit(const BigInt& c) { return c; }
};

template <>
struct CoeffTraits<Rational> {
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static bool is_zero(const Rational& c) { return c == 0; }
    static bool is_unit(const Rational& c) { return c != 0; }
    static Rational inv_unit(const Rational& c) { return 1 / c; }
};

template <>
struct CoeffTraits<LaurentPoly> {
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return LaurentPoly(1); }
    static bool is_zero(const LaurentPoly& c) { return c.is_zero(); }
    // Units of Z[x, 1/x, y, 1/y] are +-monomials.
    static bool is_unit(const LaurentPoly& c) {
        return c.size() == 1 && (c.terms()[0].c == 1 || c.terms()[0].c == -1);
    }
    static LaurentPoly inv_unit(const LaurentPoly& c) {
        const auto& t = c.terms()[0];
        return LaurentPoly::monomial(-t.a, -t.b, t.c);
    }
};

template <>
struct CoeffTraits<Complex> {
    static Complex zero() { return Complex(0); }
    static Complex one() { return Complex(1); }
    static bool is_zero(const Complex& c) { return c.re == 0 && c.im == 0; }
    static bool is_unit(const Complex& c) { return !is_zero(c); }
    static Complex inv_unit(const Complex& c) { return Complex(1) / c; }
};

// Dense truncated power series sum_{n=0}^{N} c_n q^n.
template <class C>
class QSeries {
public:
    QSeries() : QSeries(0) {}
    explicit QSeries(int order) : c_(static_cast<std::size_t>(order) + 1, CoeffTraits<C>::zero()) {}
    QSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(CoeffTraits<C>::zero());
    }

    static QSeries identity(int order) {
        QSeries s(order);
        s.c_[0] = CoeffTraits<C>::one();
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    C& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
    const std::vector<C>& coeffs() const { return c_; }

    QSeries truncated(int order) const {
        QSeries r(order);
        for (int n = 0; n <= std::min(order, this->order()); ++n) r.c_[n] = c_[n];
        return r;
    }

    bool operator==(const QSeries& o) const { return c_ == o.c_; }

private:
    std::vector<C> c_;
};

using IntQSeries = QSeries<BigInt>;
using RatQSeries = QSeries<Rational>;
using LaurentQSeries = QSeries<LaurentPoly>;

template <class C>
QSeries<C> series_add(const QSeries<C>& a, const QSeries<C>& b) {
    int N = std::min(a.order(), b.order());
    QSeries<C> r(N);
    for (int n = 0; n <= N; ++n) {
        r[n] = a[n];
        r[n] += b[n];
    }
    return r;
}

template <class C>
QSeries<C> series_sub(const QSeries<C>& a, const QSeries<C>& b) {
    int N = std::min(a.order(), b.order());
    QSeries<C> r(N);
    for (int n = 0; n <= N; ++n) {
        r[n] = a[n];
        r[n] -= b[n];
    }
    return r;
}

template <class C>
QSeries<C> series_mul(const QSeries<C>& a, const QSeries<C>& b) {
    int N = std::min(a.order(), b.order());
    QSeries<C> r(N);
    for (int i = 0; i <= N; ++i) {
        if (CoeffTraits<C>::is_zero(a[i])) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (CoeffTraits<C>::is_zero(b[j])) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

template <class C>
QSeries<C> series_inverse(const QSeries<C>& a) {
    if (!CoeffTraits<C>::is_unit(a[0])) throw NonUnitConstantTerm();
    int N = a.order();
    C u = CoeffTraits<C>::inv_unit(a[0]);
    QSeries<C> r(N);
    r[0] = u;
    for (int n = 1; n <= N; ++n) {
        C acc = CoeffTraits<C>::zero();
        for (int i = 1; i <= n; ++i) {
            if (CoeffTraits<C>::is_zero(a[i]) || CoeffTraits<C>::is_zero(r[n - i])) continue;
            acc += a[i] * r[n - i];
        }
        r[n] = -(u * acc);
    }
    return r;
}

// Multiplies s in place by (1 - x^a y^b q^m)^e.
void mul_binomial_pow(LaurentQSeries& s, int a, int b, int m, long e);
// Integer version: multiplies by (1 - c q^m)^e.
void mul_binomial_pow(IntQSeries& s, const BigInt& c, int m, long e);

// (1 - x^a y^b q^m)^e to order N; negative e goes through series_inverse.
LaurentQSeries product_factor_pow(int a, int b, int m, long e, int N);

// Complex series sum_i c_i q^{offset + i*step}.
struct ComplexQSeries {
    std::vector<Complex> coeffs;
    Rational offset = 0;
    Rational step = 1;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    // Evaluates at q = e(tau) using exact exponents.
    Complex evaluate(const Complex& tau) const;
};

ComplexQSeries complex_mul(const ComplexQSeries& a, const ComplexQSeries& b);

ComplexQSeries specialize(const LaurentQSeries& s, const Complex& x0, const Complex& y0,
                          unsigned precision_bits);
ComplexQSeries specialize(const IntQSeries& s, unsigned precision_bits);

}  // namespace qc
