#include <benchmark/benchmark.h>

#include "kesten/identities.hpp"
#include "kesten/moments.hpp"
#include "kesten/polynomial.hpp"
#include "kesten/quad.hpp"
#include "kesten/quadrature.hpp"
#include "kesten/sequences.hpp"

namespace {

using namespace kesten;

void catalanNumbers(benchmark::State& state) {
    long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(catalan(n));
}
BENCHMARK(catalanNumbers)->Arg(20)->Arg(100)->Arg(1000);

void closedForm(benchmark::State& state) {
    auto params = classifyParams(Rational(3), Rational(2));
    int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(momentClosed(m, params).value);
}
BENCHMARK(closedForm)->Arg(4)->Arg(12)->Arg(24);

void sFormSum(benchmark::State& state) {
    auto params = classifyParams(Rational(3), Rational(2));
    int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(momentSForm(m, params).value);
}
BENCHMARK(sFormSum)->Arg(4)->Arg(12)->Arg(24);

void seriesPartialSum(benchmark::State& state) {
    auto params = classifyParams(Rational(3), Rational(2));
    Rational tol = pow(Rational(Integer(1), Integer(10)), 12);
    for (auto _ : state) benchmark::DoNotOptimize(momentSeries(6, params, tol).value);
}
BENCHMARK(seriesPartialSum);

void polynomialProduct(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    auto forms = momentPolyForms(m);
    for (auto _ : state) benchmark::DoNotOptimize(polyMul(forms[0], forms[1]));
}
BENCHMARK(polynomialProduct)->Arg(6)->Arg(12)->Arg(20);

void goldenPower(benchmark::State& state) {
    QuadElement phi = goldenRatio();
    long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(quadPow(phi, n));
}
BENCHMARK(goldenPower)->Arg(30)->Arg(300);

void identitySweep(benchmark::State& state) {
    int mMax = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(runIdentity("prop1i", mMax).passed);
}
BENCHMARK(identitySweep)->Arg(8)->Arg(15);

void hankelMinors(benchmark::State& state) {
    int size = static_cast<int>(state.range(0));
    Rational t(Integer(3), Integer(4));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            hankelCheck(HankelFamily::kestenEven, t, Rational(0), size).passed);
}
BENCHMARK(hankelMinors)->Arg(4)->Arg(6)->Arg(8);

void quadratureMoment(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(momentByQuadrature(m, 3.0, 2.0, 1e-10).value);
}
BENCHMARK(quadratureMoment)->Arg(2)->Arg(8);

} // namespace

BENCHMARK_MAIN();
