#include "qcircle/numeric.hpp"

#include <mpfr.h>

#include <numeric>
#include <stdexcept>

namespace qc {

namespace {
unsigned bits_to_digits10(unsigned bits) { return static_cast<unsigned>(bits * 0.30103) + 2; }
}  // namespace

PrecisionScope::PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

unsigned current_precision_bits() {
    Real probe;
    return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

Complex& Complex::operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator*(Complex a, const Real& s) { return a *= s; }
Complex operator*(const Real& s, Complex a) { return a *= s; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }

Complex exp(const Complex& z) {
    Real m = boost::multiprecision::exp(z.re);
    return Complex(m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im));
}

Complex log(const Complex& z) { return Complex(boost::multiprecision::log(abs(z)), arg(z)); }

Complex pow(const Complex& z, const Real& s) {
    if (z.re == 0 && z.im == 0) return Complex(0);
    return exp(log(z) * s);
}

Complex pow_int(Complex z, long e) {
    if (e < 0) return Complex(1) / pow_int(std::move(z), -e);
    Complex r(1);
    while (e) {
        if (e & 1) r *= z;
        e >>= 1;
        if (e) z *= z;
    }
    return r;
}

Complex sqrt(const Complex& z) { return pow(z, Real(0.5)); }

Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

Real to_real(const BigInt& n) {
    Real r;
    mpfr_set_z(r.backend().data(), n.backend().data(), MPFR_RNDN);
    return r;
}

Complex expi2pi(const Real& x) {
    Real f = frac(x);
    Real a = 2 * pi() * f;
    return Complex(boost::multiprecision::cos(a), boost::multiprecision::sin(a));
}

Complex expi2pi(const Rational& x) { return expi2pi(to_real(frac(x))); }

BigInt floor_q(const Rational& x) {
    BigInt n = numerator(x), d = denominator(x);
    BigInt q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

Rational frac(const Rational& x) { return x - Rational(floor_q(x)); }

Real frac(const Real& x) { return x - boost::multiprecision::floor(x); }

std::string truncate_decimal(const Real& x, int places) {
    Real scale = boost::multiprecision::pow(Real(10), places);
    Real t = boost::multiprecision::trunc(boost::multiprecision::abs(x) * scale);
    BigInt v;
    mpfr_get_z(v.backend().data(), t.backend().data(), MPFR_RNDZ);
    std::string digits = v.str();
    if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    if (x < 0 && v != 0) out.insert(0, "-");
    return out;
}

std::string truncate_decimal(const Rational& x, int places) {
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    BigInt num = numerator(x), den = denominator(x);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt v = num * scale / den;
    std::string digits = v.str();
    if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    if (neg && v != 0) out.insert(0, "-");
    return out;
}

std::string sci(const Real& x, int sig) {
    if (x == 0) return "0";
    Real a = boost::multiprecision::abs(x);
    long e = static_cast<long>(boost::multiprecision::floor(boost::multiprecision::log10(a)));
    Real m = a / boost::multiprecision::pow(Real(10), e);
    Real scale = boost::multiprecision::pow(Real(10), sig - 1);
    Real r = boost::multiprecision::round(m * scale);
    if (r >= 10 * scale) {
        r /= 10;
        r = boost::multiprecision::round(r);
        ++e;
    }
    BigInt v;
    mpfr_get_z(v.backend().data(), r.backend().data(), MPFR_RNDN);
    std::string d = v.str();
    std::string mant = d.substr(0, 1);
    if (d.size() > 1) mant += "." + d.substr(1);
    std::string out = (x < 0 ? "-" : "") + mant;
    if (e != 0) out += "e" + std::to_string(e);
    return out;
}

BigInt round_to_int(const Real& x) {
    Real r = boost::multiprecision::round(x);
    BigInt v;
    mpfr_get_z(v.backend().data(), r.backend().data(), MPFR_RNDN);
    return v;
}

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }

long mod_l(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long inv_mod(long a, long m) {
    if (m == 1) return 0;
    long g = m, x = 0, x1 = 1, b = mod_l(a, m);
    while (b) {
        long q = g / b;
        long t = g - q * b;
        g = b;
        b = t;
        t = x - q * x1;
        x = x1;
        x1 = t;
    }
    if (g != 1) throw std::invalid_argument("inv_mod: not invertible");
    return mod_l(x, m);
}

}  // namespace qc
