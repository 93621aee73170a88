#include "qcircle/series.hpp"

#include <unordered_map>

namespace qc {

namespace {

bool term_less(const LaurentPoly::Term& t, int a, int b) { return t.a < a || (t.a == a && t.b < b); }

}  // namespace

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.push_back({0, 0, BigInt(c)});
}

LaurentPoly LaurentPoly::monomial(int a, int b, BigInt c) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({a, b, std::move(c)});
    return p;
}

BigInt LaurentPoly::coeff(int a, int b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair<int, int>(a, b),
                               [](const Term& t, const std::pair<int, int>& k) {
                                   return term_less(t, k.first, k.second);
                               });
    if (it != terms_.end() && it->a == a && it->b == b) return it->c;
    return 0;
}

std::map<std::pair<int, int>, BigInt> LaurentPoly::to_map() const {
    std::map<std::pair<int, int>, BigInt> m;
    for (const auto& t : terms_) m.emplace(std::make_pair(t.a, t.b), t.c);
    return m;
}

void LaurentPoly::add_shifted(const LaurentPoly& o, int da, int db, int sign) {
    if (o.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && term_less(*i, j->a + da, j->b + db))) {
            out.push_back(std::move(*i));
            ++i;
        } else if (i == terms_.end() || i->a != j->a + da || i->b != j->b + db) {
            out.push_back({j->a + da, j->b + db, sign > 0 ? j->c : BigInt(-j->c)});
            ++j;
        } else {
            if (sign > 0)
                i->c += j->c;
            else
                i->c -= j->c;
            if (i->c != 0) out.push_back(std::move(*i));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    add_shifted(o, 0, 0, 1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    add_shifted(o, 0, 0, -1);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<std::pair<int, int>, BigInt> acc;
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) acc[{s.a + t.a, s.b + t.b}] += s.c * t.c;
    LaurentPoly r;
    for (auto& [k, v] : acc)
        if (v != 0) r.add_shifted(LaurentPoly::monomial(k.first, k.second, v), 0, 0, 1);
    return r;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

BigInt LaurentPoly::total() const {
    BigInt s = 0;
    for (const auto& t : terms_) s += t.c;
    return s;
}

Complex LaurentPoly::evaluate(const Complex& x, const Complex& y) const {
    std::unordered_map<int, Complex> xp, yp;
    Complex acc(0);
    for (const auto& t : terms_) {
        auto xi = xp.find(t.a);
        if (xi == xp.end()) xi = xp.emplace(t.a, pow_int(x, t.a)).first;
        auto yi = yp.find(t.b);
        if (yi == yp.end()) yi = yp.emplace(t.b, pow_int(y, t.b)).first;
        acc += (xi->second * yi->second) * to_real(t.c);
    }
    return acc;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].a != o.terms_[i].a || terms_[i].b != o.terms_[i].b || terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

void mul_binomial_pow(LaurentQSeries& s, int a, int b, int m, long e) {
    int N = s.order();
    for (long rep = 0; rep < (e < 0 ? -e : e); ++rep) {
        if (e > 0) {
            for (int n = N; n >= m; --n) s[n].add_shifted(s[n - m], a, b, -1);
        } else {
            for (int n = m; n <= N; ++n) s[n].add_shifted(s[n - m], a, b, 1);
        }
    }
}

void mul_binomial_pow(IntQSeries& s, const BigInt& c, int m, long e) {
    int N = s.order();
    for (long rep = 0; rep < (e < 0 ? -e : e); ++rep) {
        if (e > 0) {
            for (int n = N; n >= m; --n) s[n] -= c * s[n - m];
        } else {
            for (int n = m; n <= N; ++n) s[n] += c * s[n - m];
        }
    }
}

LaurentQSeries product_factor_pow(int a, int b, int m, long e, int N) {
    LaurentQSeries base = LaurentQSeries::identity(N);
    mul_binomial_pow(base, a, b, m, e < 0 ? -e : e);
    if (e >= 0) return base;
    return series_inverse(base);
}

Complex ComplexQSeries::evaluate(const Complex& tau) const {
    Complex acc(0);
    Complex q_step = exp(Complex(0, 2 * pi()) * tau * to_real(step));
    Complex qn = exp(Complex(0, 2 * pi()) * tau * to_real(offset));
    for (const auto& c : coeffs) {
        acc += c * qn;
        qn *= q_step;
    }
    return acc;
}

ComplexQSeries complex_mul(const ComplexQSeries& a, const ComplexQSeries& b) {
    if (a.step != b.step) throw ValidationError("complex_mul: mismatched exponent grids");
    ComplexQSeries r;
    r.step = a.step;
    r.offset = a.offset + b.offset;
    int N = std::min(a.order(), b.order());
    r.coeffs.assign(static_cast<std::size_t>(N) + 1, Complex(0));
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

ComplexQSeries specialize(const LaurentQSeries& s, const Complex& x0, const Complex& y0,
                          unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    Complex x(Real(x0.re), Real(x0.im));
    Complex y(Real(y0.re), Real(y0.im));
    ComplexQSeries r;
    r.coeffs.reserve(s.coeffs().size());
    for (const auto& c : s.coeffs()) r.coeffs.push_back(c.evaluate(x, y));
    return r;
}

ComplexQSeries specialize(const IntQSeries& s, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    ComplexQSeries r;
    for (const auto& c : s.coeffs()) r.coeffs.emplace_back(to_real(c));
    return r;
}

}  // namespace qc
