#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>

namespace qc {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Sets the working precision of every Real created while the scope is alive.
// The underlying default is process-wide: open scopes before spawning workers.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

unsigned current_precision_bits();

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex& operator*=(const Real& s);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(Complex a, const Complex& b);
Complex operator*(Complex a, const Real& s);
Complex operator*(const Real& s, Complex a);
Complex operator/(Complex a, const Complex& b);

Complex conj(const Complex& z);
Real norm2(const Complex& z);
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex pow(const Complex& z, const Real& s);  // principal branch
Complex pow_int(Complex z, long e);
Complex sqrt(const Complex& z);

Real pi();
Real to_real(const Rational& q);
Real to_real(const BigInt& n);

// e(x) = exp(2 pi i x)
Complex expi2pi(const Real& x);
Complex expi2pi(const Rational& x);

// Fractional part in [0,1).
Rational frac(const Rational& x);
BigInt floor_q(const Rational& x);
Real frac(const Real& x);

// Decimal string truncated (toward zero) to `places` digits after the point.
std::string truncate_decimal(const Real& x, int places);
std::string truncate_decimal(const Rational& x, int places);
// Scientific rendering with `sig` significant digits, rounded.
std::string sci(const Real& x, int sig);

BigInt round_to_int(const Real& x);

long gcd_l(long a, long b);
long lcm_l(long a, long b);
long mod_l(long a, long m);
// Inverse of a modulo m, m >= 1, gcd(a,m)=1. Returns 0 when m == 1.
long inv_mod(long a, long m);

}  // namespace qc
