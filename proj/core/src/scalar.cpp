#include "drazin/scalar.hpp"

#include <cctype>
#include <cstddef>

namespace drazin {

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

Gaussian Gaussian::inverse() const {
    if (is_zero()) {
        throw ArithmeticError("division by zero in Q(i)");
    }
    Rational n = norm2();
    return {re / n, -im / n};
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " in scalar literal \"" + std::string(text) + "\"",
                         pos);
    }
};

mpz_class parse_digits(Cursor& c) {
    std::size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        ++c.pos;
    }
    if (c.pos == start) {
        c.fail(c.done() ? "unexpected end of input, expected digits"
                        : std::string("unexpected character '") + c.peek() + "'");
    }
    return mpz_class(std::string(c.text.substr(start, c.pos - start)), 10);
}

// RAT := INT "/" POSINT | INT.  The sign, when allowed, was consumed by
// the caller; this parses the unsigned body.
Rational parse_unsigned_rat(Cursor& c) {
    mpz_class num = parse_digits(c);
    if (!c.done() && c.peek() == '/') {
        ++c.pos;
        std::size_t den_pos = c.pos;
        mpz_class den = parse_digits(c);
        if (den == 0) {
            c.pos = den_pos;
            c.fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    return Rational(num);
}

bool starts_rat(const Cursor& c) {
    return !c.done() && std::isdigit(static_cast<unsigned char>(c.peek()));
}

} // namespace

Gaussian parse_scalar(std::string_view text) {
    Cursor c{text};
    if (c.done()) {
        c.fail("empty scalar literal");
    }

    // Leading signed RAT, or a bare (possibly signed) "i".
    bool leading_neg = false;
    if (c.peek() == '-' || c.peek() == '+') {
        leading_neg = c.peek() == '-';
        ++c.pos;
    }
    if (!c.done() && c.peek() == 'i' && !starts_rat(c)) {
        // "i", "-i", "+i"
        ++c.pos;
        if (!c.done()) {
            c.fail("trailing characters after 'i'");
        }
        return {Rational(0), Rational(leading_neg ? -1 : 1)};
    }

    Rational first = parse_unsigned_rat(c);
    if (leading_neg) {
        first = -first;
    }
    if (c.done()) {
        return {first, Rational(0)}; // pure real
    }

    if (c.peek() == 'i') {
        // [RAT] "i": pure imaginary
        ++c.pos;
        if (!c.done()) {
            c.fail("trailing characters after 'i'");
        }
        return {Rational(0), first};
    }

    if (c.peek() != '+' && c.peek() != '-') {
        c.fail(std::string("unexpected character '") + c.peek() + "'");
    }
    bool im_neg = c.peek() == '-';
    ++c.pos;

    Rational second(1);
    if (starts_rat(c)) {
        second = parse_unsigned_rat(c);
    }
    if (c.done() || c.peek() != 'i') {
        c.fail(c.done() ? "unexpected end of input, expected 'i'"
                        : std::string("unexpected character '") + c.peek() + "'");
    }
    ++c.pos;
    if (!c.done()) {
        c.fail("trailing characters after 'i'");
    }
    if (im_neg) {
        second = -second;
    }
    return {first, second};
}

std::string format_scalar(const Gaussian& z) {
    if (z.im == 0) {
        return rational_to_string(z.re);
    }
    std::string im_part = rational_to_string(z.im) + "i";
    if (z.re == 0) {
        return im_part;
    }
    std::string out = rational_to_string(z.re);
    if (z.im > 0) {
        out += '+';
    }
    return out + im_part;
}

} // namespace drazin
