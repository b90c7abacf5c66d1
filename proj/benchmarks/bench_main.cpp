#include <benchmark/benchmark.h>

#include "ultra/hypermaster.hpp"
#include "ultra/merge.hpp"
#include "ultra/radical.hpp"
#include "ultra/solver.hpp"

using namespace ultra;

namespace {

void BM_MasterSeries_SmallArg(benchmark::State& state) {
    const MasterParams p{1, 5, 2};
    const Complex x = 0.3 * convergence_radius(5, 2).value;
    for (auto _ : state) benchmark::DoNotOptimize(master_series(p, x));
}
BENCHMARK(BM_MasterSeries_SmallArg);

void BM_MasterSeries_NearBoundary(benchmark::State& state) {
    const MasterParams p{1, 5, 2};
    const Complex x = 0.98 * convergence_radius(5, 2).value;
    SeriesOptions opts;
    opts.max_terms = 20000;
    for (auto _ : state) benchmark::DoNotOptimize(master_series(p, x, 0, opts));
}
BENCHMARK(BM_MasterSeries_NearBoundary);

void BM_MasterSeries_ComplexParams(benchmark::State& state) {
    const MasterParams p{{1, 0.2}, {2.5, -0.3}, {1.1, 0.4}};
    const Complex x{0.05, 0.04};
    for (auto _ : state) benchmark::DoNotOptimize(master_series(p, x));
}
BENCHMARK(BM_MasterSeries_ComplexParams);

void BM_Ultra_Direct(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ultra_radical(2, 5, 2, 0.25));
}
BENCHMARK(BM_Ultra_Direct);

void BM_Ultra_Continuation(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ultra_radical(2, 5, 2, 7.0));
}
BENCHMARK(BM_Ultra_Continuation);

void BM_Solver_Fractional(benchmark::State& state) {
    SolverOptions opts;
    opts.a_ratio = Rational(2, 3);
    opts.b_ratio = Rational(1, 2);
    const TrinomialEq eq{1.0, Complex(2.0 / 3.0), 0.01, Complex(0.5), 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(solver_abc(0, eq, opts));
}
BENCHMARK(BM_Solver_Fractional);

void BM_Multiterm_Quartic(benchmark::State& state) {
    const MultiTermEq eq{1.0, 4.0, 1.0, {{0.05, 1.0}, {0.02, 2.0}, {0.01, 3.0}}};
    for (auto _ : state) benchmark::DoNotOptimize(solve_multiterm(0, eq));
}
BENCHMARK(BM_Multiterm_Quartic);

void BM_Gauss2F1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gauss_2f1(0.3, 0.7, 1.9, 0.2));
}
BENCHMARK(BM_Gauss2F1);

} // namespace

BENCHMARK_MAIN();
