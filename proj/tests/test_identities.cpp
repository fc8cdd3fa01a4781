#include <doctest.h>

#include <algorithm>

#include "kesten/identities.hpp"
#include "kesten/moments.hpp"

using namespace kesten;

namespace {

Rational rat(long num, long den = 1) { return Rational(Integer(num), Integer(den)); }

} // namespace

TEST_CASE("registry lists every identity in order") {
    std::vector<std::string> ids;
    for (const auto& entry : identityRegistry()) ids.push_back(entry.id);
    CHECK(ids == std::vector<std::string>{"prop1i", "prop1ii", "ex1a", "ex1b", "ex1c",
                                          "ex2a", "ex2b", "ex2c", "fine"});
}

TEST_CASE("every registered identity passes its default sweep") {
    for (const auto& entry : identityRegistry()) {
        auto report = runIdentity(entry.id, -1);
        INFO(report.id, " ", report.range);
        CHECK(report.passed);
        CHECK_FALSE(report.counterexample.has_value());
    }
}

TEST_CASE("runIdentity honors an explicit bound") {
    auto report = runIdentity("ex1a", 5);
    CHECK(report.range == "1 <= m <= 5");
    CHECK(report.passed);
    CHECK_THROWS_AS(runIdentity("nope", 5), UsageError);
}

TEST_CASE("perturbed polynomial builder is detected") {
    PolyFormsBuilder broken = [](int m) {
        auto forms = momentPolyForms(m);
        if (m == 2) {
            auto cs = forms[0].coeffs();
            cs[1] += rat(1);
            forms[0] = Polynomial<Rational>(cs);
        }
        return forms;
    };
    auto report = verifyProp1i(6, broken);
    CHECK_FALSE(report.passed);
    REQUIRE(report.counterexample.has_value());
    CHECK(report.counterexample->at.find("m=2") != std::string::npos);
    CHECK(report.counterexample->lhs != report.counterexample->rhs);
}

TEST_CASE("perturbed lucas hook breaks the golden-ratio chain") {
    SequenceHooks hooks;
    hooks.lucas = [](long n) { return kesten::lucas(n) + (n == 4 ? 1 : 0); };
    auto report = verifyEx1c(10, hooks);
    CHECK_FALSE(report.passed);
    REQUIRE(report.counterexample.has_value());
    CHECK_FALSE(report.counterexample->at.empty());
}

TEST_CASE("perturbed triangleB hook breaks the fine identities") {
    SequenceHooks hooks;
    hooks.triangleB = [](long k, long j) {
        return kesten::triangleB(k, j) + (k == 5 && j == 2 ? 1 : 0);
    };
    auto report = verifyFine(8, hooks);
    CHECK_FALSE(report.passed);
    REQUIRE(report.counterexample.has_value());
}

TEST_CASE("perturbed catalan hook breaks the integer example") {
    SequenceHooks hooks;
    hooks.catalan = [](long n) { return kesten::catalan(n) + (n == 3 ? 1 : 0); };
    auto report = verifyEx2a(12, hooks);
    CHECK_FALSE(report.passed);
    REQUIRE(report.counterexample.has_value());
}

TEST_CASE("hankel families parse") {
    CHECK(parseHankelFamily("kestenEven") == HankelFamily::kestenEven);
    CHECK(parseHankelFamily("truncatedConvex") == HankelFamily::truncatedConvex);
    CHECK_THROWS_AS(parseHankelFamily("bogus"), UsageError);
    CHECK(hankelFamilyName(HankelFamily::kestenEven) == "kestenEven");
}

TEST_CASE("kesten even moments pass the minor test") {
    for (auto [tn, td] : std::vector<std::pair<long, long>>{{1, 2}, {3, 4}, {1, 1}, {6, 5}}) {
        auto report = hankelCheck(HankelFamily::kestenEven, rat(tn, td), rat(0), 5);
        INFO(report.range);
        CHECK(report.passed);
    }
}

TEST_CASE("convex deformation stays a moment sequence for t at most one") {
    for (auto [tn, td] : std::vector<std::pair<long, long>>{{1, 2}, {3, 4}, {1, 1}})
        for (auto [dn, dd] : std::vector<std::pair<long, long>>{{0, 1}, {1, 2}, {1, 1}}) {
            auto report =
                hankelCheck(HankelFamily::truncatedConvex, rat(tn, td), rat(dn, dd), 5);
            INFO(report.range);
            CHECK(report.passed);
        }
}

TEST_CASE("convex deformation fails beyond t = 1") {
    auto report = hankelCheck(HankelFamily::truncatedConvex, rat(6, 5), rat(1), 3);
    CHECK_FALSE(report.passed);
    REQUIRE(report.counterexample.has_value());
    CHECK(report.counterexample->at == "shifted minor order 1");
    CHECK(report.counterexample->lhs == "-1/5");
    auto half = hankelCheck(HankelFamily::truncatedConvex, rat(6, 5), rat(1, 2), 5);
    CHECK_FALSE(half.passed);
    REQUIRE(half.counterexample.has_value());
    CHECK(half.counterexample->at == "shifted minor order 2");
}

TEST_CASE("hankel domain checks") {
    CHECK_THROWS_AS(hankelCheck(HankelFamily::kestenEven, rat(2), rat(0), 4), ParameterError);
    CHECK_THROWS_AS(hankelCheck(HankelFamily::kestenEven, rat(1, 3), rat(0), 4),
                    ParameterError);
    CHECK_THROWS_AS(hankelCheck(HankelFamily::truncatedConvex, rat(1), rat(2), 4),
                    ParameterError);
    CHECK_THROWS_AS(hankelCheck(HankelFamily::kestenEven, rat(1), rat(0), 0), UsageError);
}

TEST_CASE("x polynomial forms collapse to degree m") {
    auto forms = xPolyForms(2, SequenceHooks{});
    for (const auto& form : forms) {
        REQUIRE(form.degree().has_value());
        CHECK(*form.degree() == 2);
        CHECK(polyEval(form, rat(1)) == rat(6));
        CHECK(polyEval(form, rat(0)) == rat(1));
    }
}
