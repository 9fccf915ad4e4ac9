#include <benchmark/benchmark.h>

#include "gwa/endo.hpp"
#include "gwa/parse.hpp"
#include "gwa/semiclassical.hpp"

namespace {

gwa::GWAParams make_params() { return gwa::GWAParams(gwa::parse_a_poly("h^3+h+1")); }

void BM_OreMulYPastX(benchmark::State& state) {
    gwa::GWAParams params = make_params();
    std::int64_t deg = state.range(0);
    gwa::OreElement f = gwa::ore_pow(gwa::OreElement::y(), deg, params);
    gwa::OreElement g = gwa::ore_pow(gwa::OreElement::x(), deg, params);
    for (auto _ : state) {
        // Fresh params each round so the delta memo is cold.
        gwa::GWAParams cold = make_params();
        benchmark::DoNotOptimize(gwa::ore_mul(f, g, cold));
    }
    state.SetComplexityN(deg);
}
BENCHMARK(BM_OreMulYPastX)->DenseRange(2, 10, 2)->Complexity();

void BM_OreMulMemoWarm(benchmark::State& state) {
    gwa::GWAParams params = make_params();
    std::int64_t deg = state.range(0);
    gwa::OreElement f = gwa::ore_pow(gwa::OreElement::y(), deg, params);
    gwa::OreElement g = gwa::ore_pow(gwa::OreElement::x(), deg, params);
    gwa::ore_mul(f, g, params);  // warm the delta memo
    for (auto _ : state) benchmark::DoNotOptimize(gwa::ore_mul(f, g, params));
}
BENCHMARK(BM_OreMulMemoWarm)->DenseRange(2, 10, 2);

void BM_ScBracket(benchmark::State& state) {
    gwa::GWAParams params = make_params();
    gwa::OreElement f = gwa::OreElement::monomial({0, -2, 3, 1}, gwa::Scalar::integer(2));
    gwa::OreElement g = gwa::OreElement::monomial({0, 1, 1, 2}, gwa::Scalar::integer(-3));
    for (auto _ : state) benchmark::DoNotOptimize(gwa::sc_bracket(f, g, params));
}
BENCHMARK(BM_ScBracket);

void BM_ScalarMulCyclotomic(benchmark::State& state) {
    std::int64_t n = state.range(0);
    gwa::Scalar a = gwa::Scalar::root_of_unity(n, 1) + gwa::Scalar::integer(2);
    gwa::Scalar b = gwa::Scalar::root_of_unity(n, n - 1) - gwa::Scalar::integer(1);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMulCyclotomic)->Arg(4)->Arg(12)->Arg(36)->Arg(120);

void BM_LaurentGcd(benchmark::State& state) {
    gwa::LaurentPoly a = gwa::parse_a_poly("(h-1)^4(h+2)^3(h^2+1)^2");
    gwa::LaurentPoly da = gwa::formal_derivative(a, "h");
    for (auto _ : state) benchmark::DoNotOptimize(gwa::laurent_gcd(a, da));
}
BENCHMARK(BM_LaurentGcd);

void BM_SolveNegative(benchmark::State& state) {
    gwa::GWAParams params(gwa::parse_a_poly("h^4+3h^3+5h^2+3h+1"), 12);
    for (auto _ : state) benchmark::DoNotOptimize(gwa::solve_negative(params));
}
BENCHMARK(BM_SolveNegative);

}  // namespace

BENCHMARK_MAIN();
