#include <doctest.h>

#include "kesten/quad.hpp"
#include "kesten/sequences.hpp"

using namespace kesten;

TEST_CASE("golden ratio satisfies phi^2 = phi + 1") {
    QuadElement phi = goldenRatio();
    CHECK(phi * phi == phi + Rational(1));
}

TEST_CASE("powers of phi carry Lucas and Fibonacci halves") {
    QuadElement phi = goldenRatio();
    for (int k = 0; k <= 30; ++k) {
        QuadElement pk = quadPow(phi, k);
        CHECK(pk.a() == Rational(lucas(k)) / Rational(2));
        CHECK(pk.b() == Rational(fibonacci(k)) / Rational(2));
    }
}

TEST_CASE("omega is a primitive sixth root of unity") {
    QuadElement w = omega();
    CHECK(w * w == w - Rational(1));
    CHECK(quadPow(w, 6) == w.oneLike());
    CHECK(quadPow(w, 3) == -w.oneLike());
    CHECK_FALSE(quadPow(w, 2) == w.oneLike());
    for (int n = 0; n <= 24; ++n) CHECK(quadPow(w, n + 6) == quadPow(w, n));
}

TEST_CASE("omega times its reflection is one") {
    QuadElement w = omega();
    CHECK(w * (w.oneLike() - w) == w.oneLike());
}

TEST_CASE("product rule matches the defining relation") {
    auto theta = QuadElement(Rational(0), Rational(1), sqrt5Algebra());
    CHECK(theta * theta == QuadElement(Rational(5), Rational(0), sqrt5Algebra()));
    QuadElement x(Rational(Integer(2), Integer(3)), Rational(Integer(-1), Integer(2)),
                  sqrt5Algebra());
    QuadElement y(Rational(Integer(1), Integer(5)), Rational(4), sqrt5Algebra());
    QuadElement xy = x * y;
    CHECK(xy.a() == Rational(Integer(2), Integer(15)) + Rational(Integer(-1), Integer(2)) *
                                                            Rational(4) * Rational(5));
    CHECK(xy.b() == Rational(Integer(2), Integer(3)) * Rational(4) +
                        Rational(Integer(-1), Integer(2)) * Rational(Integer(1), Integer(5)));
}

TEST_CASE("algebras do not mix") {
    CHECK_THROWS_AS(goldenRatio() * omega(), UsageError);
    CHECK_THROWS_AS(goldenRatio() + omega(), UsageError);
}

TEST_CASE("zeta6Parts splits against the real axis") {
    QuadElement w = omega();
    auto parts = zeta6Parts(QuadElement(Rational(3), Rational(-2), zeta6Algebra()));
    CHECK(parts.first == Rational(2));
    CHECK(parts.second == Rational(-2));
    CHECK_THROWS_AS(zeta6Parts(goldenRatio()), UsageError);
    auto one = zeta6Parts(quadPow(w, 6));
    CHECK(one.first == Rational(1));
    CHECK(one.second == Rational(0));
}

TEST_CASE("negative powers are rejected") {
    CHECK_THROWS_AS(quadPow(goldenRatio(), -1), UsageError);
}

TEST_CASE("rational embedding") {
    QuadElement w = omega();
    QuadElement c = w.oneLike() * Rational(Integer(7), Integer(2));
    CHECK(c.isRational());
    CHECK_FALSE(w.isRational());
    CHECK((w + Rational(1)).a() == Rational(1));
    CHECK(c.toString() == "7/2 + (0/1)*theta[zeta6]");
}
