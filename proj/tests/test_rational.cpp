#include <doctest.h>

#include "kesten/rational.hpp"

using kesten::DomainError;
using kesten::Integer;
using kesten::Rational;
using kesten::UsageError;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(Integer(2), Integer(4)).toString() == "1/2");
    CHECK(Rational(Integer(-2), Integer(4)).toString() == "-1/2");
    CHECK(Rational(Integer(2), Integer(-4)).toString() == "-1/2");
    CHECK(Rational(Integer(-2), Integer(-4)).toString() == "1/2");
    CHECK(Rational(Integer(0), Integer(7)).toString() == "0/1");
    CHECK(Rational(5).toString() == "5/1");
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
}

TEST_CASE("fromString accepts integers and fractions") {
    CHECK(Rational::fromString("3") == Rational(3));
    CHECK(Rational::fromString("-7/2") == Rational(Integer(-7), Integer(2)));
    CHECK(Rational::fromString("6/4") == Rational(Integer(3), Integer(2)));
    CHECK(Rational::fromString("0") == Rational(0));
    CHECK(Rational::fromString("98765432109876543210987654321/2").toString() ==
          "98765432109876543210987654321/2");
}

TEST_CASE("fromString rejects junk") {
    CHECK_THROWS_AS(Rational::fromString(""), UsageError);
    CHECK_THROWS_AS(Rational::fromString("x"), UsageError);
    CHECK_THROWS_AS(Rational::fromString("1.5"), UsageError);
    CHECK_THROWS_AS(Rational::fromString("1/"), UsageError);
    CHECK_THROWS_AS(Rational::fromString("/2"), UsageError);
    CHECK_THROWS_AS(Rational::fromString("1/0"), UsageError);
    CHECK_THROWS_AS(Rational::fromString("1//2"), UsageError);
    CHECK_THROWS_AS(Rational::fromString("2/-3"), UsageError);
    CHECK_THROWS_AS(Rational::fromString(" 1/2"), UsageError);
}

TEST_CASE("field arithmetic is exact") {
    Rational a(Integer(1), Integer(3));
    Rational b(Integer(1), Integer(6));
    CHECK((a + b).toString() == "1/2");
    CHECK((a - b).toString() == "1/6");
    CHECK((a * b).toString() == "1/18");
    CHECK((a / b).toString() == "2/1");
    CHECK((-a).toString() == "-1/3");
    CHECK_THROWS_AS(a / Rational(0), DomainError);
}

TEST_CASE("pow handles negative exponents") {
    Rational half(Integer(1), Integer(2));
    CHECK(pow(half, 3).toString() == "1/8");
    CHECK(pow(half, 0).toString() == "1/1");
    CHECK(pow(half, -2).toString() == "4/1");
    CHECK(pow(Rational(-3), 3).toString() == "-27/1");
    CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);
}

TEST_CASE("ordering and predicates") {
    CHECK(Rational(Integer(1), Integer(3)) < Rational(Integer(1), Integer(2)));
    CHECK(Rational(Integer(-1), Integer(2)) < Rational(0));
    CHECK(Rational(2) >= Rational(2));
    CHECK(Rational(0).isZero());
    CHECK(Rational(4).isInteger());
    CHECK_FALSE(Rational(Integer(4), Integer(3)).isInteger());
    CHECK(Rational(Integer(-5), Integer(7)).sign() == -1);
    CHECK(abs(Rational(Integer(-5), Integer(7))).toString() == "5/7");
}

TEST_CASE("toDouble is close") {
    CHECK(Rational(Integer(1), Integer(3)).toDouble() == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(Rational(Integer(-87), Integer(1)).toDouble() == -87.0);
}
