#include <doctest.h>

#include <random>

#include "drazin/scalar.hpp"

using namespace drazin;

namespace {

Gaussian random_scalar(std::mt19937_64& rng) {
    auto draw = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    };
    Rational re(draw(-12, 12), draw(1, 9));
    Rational im(draw(-12, 12), draw(1, 9));
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

} // namespace

TEST_CASE("scalar literals parse to exact values") {
    Gaussian z = parse_scalar("3/4-1/2i");
    CHECK(z.re == Rational(3, 4));
    CHECK(z.im == Rational(-1, 2));

    CHECK(parse_scalar("0") == Gaussian(0));
    CHECK(parse_scalar("2i") == Gaussian(0, 2));
    CHECK(parse_scalar("i") == Gaussian(0, 1));
    CHECK(parse_scalar("-i") == Gaussian(0, -1));
    CHECK(parse_scalar("+i") == Gaussian(0, 1));
    CHECK(parse_scalar("1+i") == Gaussian(1, 1));
    CHECK(parse_scalar("-2/3") == Gaussian(Rational(-2, 3)));
    CHECK(parse_scalar("2/4") == Gaussian(Rational(1, 2))); // canonicalized
    CHECK(parse_scalar("-7") == Gaussian(-7));
    CHECK(parse_scalar("5-3i") == Gaussian(5, -3));
}

TEST_CASE("malformed literals fail with the offending position") {
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1+"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1ii"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 + i"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/2/3"), ParseError);

    try {
        parse_scalar("1//2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    try {
        parse_scalar("1/0");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("zero denominator") != std::string::npos);
    }
}

TEST_CASE("canonical formatting") {
    CHECK(format_scalar(Gaussian(Rational(3, 4), Rational(-1, 2))) == "3/4-1/2i");
    CHECK(format_scalar(Gaussian(0)) == "0");
    CHECK(format_scalar(Gaussian(0, 2)) == "2i");
    CHECK(format_scalar(Gaussian(5)) == "5"); // no "/1"
    CHECK(format_scalar(Gaussian(1, 1)) == "1+1i");
    CHECK(format_scalar(Gaussian(0, -1)) == "-1i");
}

TEST_CASE("field operations") {
    Gaussian a(1, 1);
    Gaussian b(1, -1);
    CHECK(a * b == Gaussian(2));
    CHECK(Gaussian(0, 1).inverse() == Gaussian(0, -1));
    CHECK(Gaussian(Rational(1, 2), Rational(1, 2)).inverse() == Gaussian(1, -1));
    CHECK_THROWS_AS(Gaussian(0).inverse(), ArithmeticError);
    CHECK_THROWS_AS(a / Gaussian(0), ArithmeticError);
}

TEST_CASE("field axioms hold exactly on random triples") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        Gaussian a = random_scalar(rng);
        Gaussian b = random_scalar(rng);
        Gaussian c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Gaussian(1));
        }
        CHECK(a + (-a) == Gaussian(0));
    }
}

TEST_CASE("parse then format is the identity on canonical values") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Gaussian z = random_scalar(rng);
        CHECK(parse_scalar(format_scalar(z)) == z);
    }
}
