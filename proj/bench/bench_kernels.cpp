// Parallel kernels against their serial references.

#include "quasisym/classify.hpp"
#include "quasisym/marginal.hpp"
#include "quasisym/serial.hpp"
#include "quasisym/value.hpp"

#include <benchmark/benchmark.h>

using namespace quasisym;

namespace {

void BM_Average(benchmark::State& state) {
    const auto d = parity_weighted(static_cast<int>(state.range(0)), Rational(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(average(d));
}

void BM_AverageSerial(benchmark::State& state) {
    const auto d = parity_weighted(static_cast<int>(state.range(0)), Rational(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(serial::average(d));
}

PermGroup bench_group(int which) {
    switch (which) {
    case 0: return symmetric_group(7);
    case 1: return alternating_group(8);
    default: return exotic_embedding().image_group;
    }
}

void BM_Supertransitive(benchmark::State& state) {
    const auto g = bench_group(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_supertransitive(g));
}

void BM_SupertransitiveSerial(benchmark::State& state) {
    const auto g = bench_group(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::is_supertransitive(g));
}

void BM_SymmetryExhaustive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto m = shapley(n);
    const auto g = symmetric_group(n);
    for (auto _ : state) benchmark::DoNotOptimize(check_symmetry(m, g, SymmetryMode::Exhaustive));
}

void BM_SymmetryExhaustiveSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto m = shapley(n);
    const auto g = symmetric_group(n);
    for (auto _ : state) benchmark::DoNotOptimize(serial::check_symmetry_exhaustive(m, g));
}

} // namespace

BENCHMARK(BM_Average)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AverageSerial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Supertransitive)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SupertransitiveSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymmetryExhaustive)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymmetryExhaustiveSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
