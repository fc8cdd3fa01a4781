#include <doctest.h>

#include "kesten/moments.hpp"
#include "kesten/sequences.hpp"

using namespace kesten;

namespace {

Rational rat(long num, long den = 1) { return Rational(Integer(num), Integer(den)); }

} // namespace

TEST_CASE("classifyParams regimes") {
    CHECK(classifyParams(rat(1), rat(1)).regime == Regime::equal);
    CHECK(classifyParams(rat(3), rat(2)).regime == Regime::seriesInterior);
    CHECK(classifyParams(rat(2), rat(1)).regime == Regime::seriesBoundary);
    CHECK(classifyParams(rat(1), rat(2)).regime == Regime::outside);
    CHECK(classifyParams(rat(1), rat(6, 5)).regime == Regime::seriesInterior);
    CHECK(classifyParams(rat(3), rat(2)).t == rat(2, 3));
}

TEST_CASE("classifyParams rejects invalid parameters") {
    CHECK_THROWS_AS(classifyParams(rat(0), rat(1)), ParameterError);
    CHECK_THROWS_AS(classifyParams(rat(1), rat(0)), ParameterError);
    CHECK_THROWS_AS(classifyParams(rat(-1), rat(1)), ParameterError);
    CHECK_THROWS_AS(classifyParams(rat(5), rat(2)), ParameterError);
}

TEST_CASE("closed form at p=3, r=2") {
    auto params = classifyParams(rat(3), rat(2));
    std::vector<long> expected{3, 15, 87, 543};
    for (int m = 1; m <= 4; ++m)
        CHECK(momentClosed(m, params).value == rat(expected[m - 1]));
    CHECK(momentClosed(0, params).value == rat(1));
}

TEST_CASE("equal parameters give Catalan moments") {
    for (Rational r : {rat(1), rat(1, 2), rat(7, 3)}) {
        auto params = classifyParams(r, r);
        for (int m = 1; m <= 8; ++m)
            CHECK(momentClosed(m, params).value == pow(r, m) * Rational(catalan(m)));
    }
}

TEST_CASE("series partial sum is certified") {
    auto params = classifyParams(rat(3), rat(2));
    Rational tol = pow(rat(1, 10), 12);
    for (int m = 1; m <= 6; ++m) {
        auto exact = momentClosed(m, params);
        auto series = momentSeries(m, params, tol);
        CHECK(series.tailBound <= tol);
        CHECK(abs(series.value - exact.value) <= series.tailBound);
    }
}

TEST_CASE("series at equal parameters terminates in one term") {
    auto params = classifyParams(rat(2), rat(2));
    auto v = momentSeries(3, params, pow(rat(1, 10), 12));
    CHECK(v.value == rat(8 * 5));
    CHECK(v.tailBound.isZero());
}

TEST_CASE("series refuses the boundary and the outside") {
    auto boundary = classifyParams(rat(2), rat(1));
    CHECK_THROWS_AS(momentSeries(2, boundary, pow(rat(1, 10), 6)), BoundaryConvergenceError);
    auto outside = classifyParams(rat(1), rat(2));
    CHECK_THROWS_AS(momentSeries(2, outside, pow(rat(1, 10), 6)), DomainError);
    CHECK_THROWS_AS(momentClosed(2, outside), DomainError);
    auto interior = classifyParams(rat(3), rat(2));
    CHECK_THROWS_AS(momentSeries(2, interior, rat(0)), UsageError);
}

TEST_CASE("finite forms agree with the closed form") {
    for (auto [pn, pd, rn, rd] : std::vector<std::array<long, 4>>{
             {3, 1, 2, 1}, {2, 1, 1, 1}, {1, 1, 6, 5}, {7, 2, 2, 1}, {1, 3, 1, 4}}) {
        auto params = classifyParams(rat(pn, pd), rat(rn, rd));
        for (int m = 1; m <= 10; ++m) {
            Rational reference = momentSForm(m, params).value;
            if (params.regime != Regime::outside)
                CHECK(momentClosed(m, params).value == reference);
            CHECK(momentTForm(m, params).value == reference);
            CHECK(momentBForm(m, params).value == reference);
            if (params.p != params.r)
                CHECK(momentComment1(m, params).value == reference);
        }
    }
}

TEST_CASE("forms work outside the series window") {
    auto params = classifyParams(rat(1), rat(2));
    Rational reference = momentSForm(1, params).value;
    CHECK(reference == params.p);
    CHECK(momentTForm(1, params).value == reference);
    CHECK(momentBForm(1, params).value == reference);
    CHECK(momentComment1(1, params).value == reference);
}

TEST_CASE("comment1 needs p distinct from r") {
    auto params = classifyParams(rat(2), rat(2));
    CHECK_THROWS_AS(momentComment1(1, params), DegenerateDenominatorError);
}

TEST_CASE("index requirements") {
    auto params = classifyParams(rat(3), rat(2));
    CHECK(momentSForm(0, params).value == rat(1));
    CHECK_THROWS_AS(momentTForm(0, params), UsageError);
    CHECK_THROWS_AS(momentBForm(0, params), UsageError);
    CHECK_THROWS_AS(momentComment1(0, params), UsageError);
    CHECK_THROWS_AS(momentClosed(-1, params), UsageError);
}

TEST_CASE("polynomial forms evaluate to the bracket") {
    for (auto [pn, pd, rn, rd] : std::vector<std::array<long, 4>>{
             {3, 1, 2, 1}, {1, 1, 6, 5}, {5, 1, 3, 1}}) {
        auto params = classifyParams(rat(pn, pd), rat(rn, rd));
        for (int m = 1; m <= 6; ++m) {
            auto forms = momentPolyForms(m);
            Rational target = momentSForm(m, params).value *
                              pow(Rational(1) - params.t, m) / pow(params.p, m);
            for (const auto& form : forms) {
                REQUIRE(form.degree().has_value());
                CHECK(*form.degree() <= 2 * m - 1);
                CHECK(polyEval(form, params.t) == target);
            }
        }
    }
    CHECK_THROWS_AS(momentPolyForms(0), UsageError);
}

TEST_CASE("method names round-trip") {
    for (auto method : {Method::closed, Method::series, Method::sform, Method::tform,
                        Method::bform, Method::comment1, Method::quadrature})
        CHECK(parseMethod(methodName(method)) == method);
    CHECK(parseMethod("quad") == Method::quadrature);
    CHECK_THROWS_AS(parseMethod("exact"), UsageError);
}
