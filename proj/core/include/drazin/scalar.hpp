#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "drazin/errors.hpp"

namespace drazin {

/// Arbitrary-precision rational, kept canonical (denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1).  GMP's mpq_class maintains exactly
/// this form under arithmetic, so equality is structural.
using Rational = mpq_class;

/// Canonical text form of a rational: "p" when integral, else "p/q".
std::string rational_to_string(const Rational& q);

/// Element of Q(i): a complex number with rational real and imaginary
/// parts.  Values are immutable in spirit; all operations return fresh
/// values and equality is exact component-wise comparison.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() : re(0), im(0) {}
    Gaussian(long r) : re(r), im(0) {} // NOLINT: implicit by design
    Gaussian(Rational r) : re(std::move(r)), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    Gaussian conj() const { return {re, -im}; }

    /// |z|^2 = re^2 + im^2, a rational.
    Rational norm2() const { return re * re + im * im; }

    Gaussian operator-() const { return {-re, -im}; }

    Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
    Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }

    Gaussian operator*(const Gaussian& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    /// Multiplicative inverse; throws ArithmeticError on zero.
    Gaussian inverse() const;

    Gaussian operator/(const Gaussian& o) const { return *this * o.inverse(); }

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }

    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Gaussian& o) const { return !(*this == o); }
};

/// Parse a scalar literal.  Grammar (no whitespace):
///   COMPLEX := RAT | [RAT] SIGN [RAT] "i" | [RAT] "i"
///   RAT     := INT | INT "/" POSINT
/// A bare "i" carries coefficient 1; the leading RAT may be signed, the
/// RAT after SIGN is unsigned.  Throws ParseError naming the offending
/// character position (0-based); a zero denominator is a parse error.
Gaussian parse_scalar(std::string_view text);

/// Canonical emission: zero imaginary part omitted, integral rationals
/// written without "/1", pure-imaginary values written as "<rat>i".
/// parse_scalar(format_scalar(z)) == z for every z.
std::string format_scalar(const Gaussian& z);

} // namespace drazin
