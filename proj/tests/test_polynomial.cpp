#include <doctest.h>

#include "kesten/polynomial.hpp"
#include "kesten/quad.hpp"

using namespace kesten;

namespace {

Polynomial<Rational> poly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return Polynomial<Rational>(v);
}

} // namespace

TEST_CASE("trim drops trailing zeros") {
    Polynomial<Rational> p({Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.coeffs().size() == 2);
    CHECK(p.degree() == 1);
    Polynomial<Rational> z({Rational(0), Rational(0)});
    CHECK(z.isZero());
    CHECK_FALSE(z.degree().has_value());
}

TEST_CASE("addition cancels exactly") {
    auto p = poly({1, 1});
    auto q = poly({-1, -1});
    CHECK(polyAdd(p, q).isZero());
    CHECK(polyEq(polyAdd(poly({1, 0, 3}), poly({0, 2})), poly({1, 2, 3})));
}

TEST_CASE("multiplication convolves") {
    auto onePlusX = poly({1, 1});
    CHECK(polyEq(polyMul(onePlusX, onePlusX), poly({1, 2, 1})));
    CHECK(polyEq(polyMul(poly({2, 0, 1}), poly({-1, 3})), poly({-2, 6, -1, 3})));
    CHECK(polyMul(onePlusX, Polynomial<Rational>{}).isZero());
}

TEST_CASE("power expands binomials") {
    auto onePlusX = poly({1, 1});
    CHECK(polyEq(polyPow(onePlusX, 4), poly({1, 4, 6, 4, 1})));
    CHECK(polyEq(polyPow(onePlusX, 0), poly({1})));
    CHECK_THROWS_AS(polyPow(onePlusX, -1), UsageError);
}

TEST_CASE("evaluation uses Horner over the coefficient field") {
    auto p = poly({3, 0, -2, 1});
    Rational x(Integer(1), Integer(2));
    CHECK(polyEval(p, x) == Rational(3) - Rational(2) * x * x + x * x * x);
    CHECK(polyEval(Polynomial<Rational>{}, x) == Rational(0));
}

TEST_CASE("rational polynomial evaluated at a quadratic point") {
    auto p = poly({1, 1, 1});
    QuadElement w = omega();
    CHECK(polyEval(p, w) == w * Rational(2));
    auto q = poly({-1, 0, 1});
    QuadElement phi = goldenRatio();
    CHECK(polyEval(q, phi) == phi * phi - Rational(1));
}

TEST_CASE("quadratic coefficients work directly") {
    QuadElement w = omega();
    std::vector<QuadElement> cs{w, w.oneLike()};
    Polynomial<QuadElement> p(cs);
    CHECK(polyEval(p, w) == w * Rational(2));
    CHECK(polyEq(polyMul(p, p), Polynomial<QuadElement>(
                                    {w * w, w * Rational(2), w.oneLike()})));
}

TEST_CASE("scaling") {
    CHECK(polyEq(polyScale(poly({1, -2, 3}), Rational(Integer(1), Integer(3))),
                 Polynomial<Rational>({Rational(Integer(1), Integer(3)),
                                       Rational(Integer(-2), Integer(3)), Rational(1)})));
}

TEST_CASE("equality ignores representation differences") {
    Polynomial<Rational> a({Rational(Integer(2), Integer(4))});
    Polynomial<Rational> b({Rational(Integer(1), Integer(2)), Rational(0)});
    CHECK(polyEq(a, b));
    CHECK_FALSE(polyEq(a, poly({1})));
}
