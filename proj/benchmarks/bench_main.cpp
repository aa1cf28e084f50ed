/// micro benchmarks for the hot paths: vertex weights, partition function
/// coefficients, basis conversion, and character values
#include "vertexforge/amplitude.hpp"
#include "vertexforge/symfun.hpp"
#include "vertexforge/toric.hpp"

#include <benchmark/benchmark.h>

using namespace vf;

static void bench_three_point_cold(benchmark::State& state) {
    Partition a{3, 1}, b{2, 2}, c{2, 1, 1};
    for (auto _ : state) {
        clear_symfun_caches();
        benchmark::DoNotOptimize(three_point(a, b, c));
    }
}
BENCHMARK(bench_three_point_cold);

static void bench_three_point_warm(benchmark::State& state) {
    Partition a{3, 1}, b{2, 2}, c{2, 1, 1};
    three_point(a, b, c);
    for (auto _ : state) benchmark::DoNotOptimize(three_point(a, b, c));
}
BENCHMARK(bench_three_point_warm);

static void bench_z_coefficient_triangle(benchmark::State& state) {
    GTGraph g = preset_local_p2();
    DegreeVector d = {2, 1, 1};
    z_coefficient(g, d);
    for (auto _ : state) benchmark::DoNotOptimize(z_coefficient(g, d));
}
BENCHMARK(bench_z_coefficient_triangle);

static void bench_to_t_polynomial(benchmark::State& state) {
    QRational s = QRational(qnum(6)) * QRational(qnum(6)); // [6]^2, a degree-6 t polynomial
    for (auto _ : state) benchmark::DoNotOptimize(to_t_polynomial(s));
}
BENCHMARK(bench_to_t_polynomial);

static void bench_character(benchmark::State& state) {
    Partition lam{4, 3, 1}, mu{3, 2, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(mn_character(lam, mu));
}
BENCHMARK(bench_character);

BENCHMARK_MAIN();
