#include "enumpw/heatpoly.hpp"
#include "enumpw/intersect.hpp"
#include "enumpw/linalg.hpp"
#include "enumpw/pwmatrix.hpp"

#include <benchmark/benchmark.h>

using namespace enumpw;

static void BM_SeriesExp(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    auto a = TruncSeries::polynomial('y', {MultiPoly(), MultiPoly::var(Var::A), MultiPoly::var(Var::G)});
    for (auto _ : state) benchmark::DoNotOptimize(series_exp(a, order));
}
BENCHMARK(BM_SeriesExp)->Arg(8)->Arg(16)->Arg(24);

static void BM_TopDefect(benchmark::State& state) {
    int g = static_cast<int>(state.range(0));
    auto Q = intersect::WittenPolynomial::canonical_q();
    auto T = intersect::WittenPolynomial::t_monomial(1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(intersect::integrate_Z_topdefect(g, g - 1, T, Q));
}
BENCHMARK(BM_TopDefect)->Arg(3)->Arg(5)->Arg(7);

static void BM_Kalkman(benchmark::State& state) {
    int g = static_cast<int>(state.range(0));
    auto Q = intersect::WittenPolynomial::canonical_q();
    auto T = intersect::WittenPolynomial::t_monomial(1, 1).times_u(3 * g - 3 - 2);
    for (auto _ : state) benchmark::DoNotOptimize(intersect::integrate_Z_kalkman(g, T, Q));
}
BENCHMARK(BM_Kalkman)->Arg(2)->Arg(3)->Arg(4);

static void BM_WEval(benchmark::State& state) {
    int k = static_cast<int>(state.range(0)), h = static_cast<int>(state.range(1));
    heat::pk(k + h);
    long g = k + h + 6;
    for (auto _ : state) benchmark::DoNotOptimize(heat::W_eval(k, h, Rational(g), Rational(3 * g - k - h - 2)));
}
BENCHMARK(BM_WEval)->Args({8, 1})->Args({6, 4})->Args({10, 6});

static void BM_Nullspace(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    auto M = pwmatrix::build_Mk(k + 4, k).m.transpose();
    for (auto _ : state) benchmark::DoNotOptimize(nullspace(M));
}
BENCHMARK(BM_Nullspace)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK_MAIN();
