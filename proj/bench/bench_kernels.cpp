// Serial reference against the OpenMP kernel, pairwise per workload.

#include <benchmark/benchmark.h>

#include <cmath>

#include "fraczeta/fracdiff.hpp"
#include "fraczeta/primes.hpp"
#include "fraczeta/transfer.hpp"
#include "fraczeta/zeta.hpp"

using namespace fraczeta;

namespace {

void BM_ZetaDirect_Serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(zeta::serial::zeta_direct({2.0, 3.0}, st.range(0)));
}
void BM_ZetaDirect_Parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(zeta::zeta_direct({2.0, 3.0}, st.range(0)));
}
BENCHMARK(BM_ZetaDirect_Serial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZetaDirect_Parallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

// Serial path uses trial-division mobius, the parallel one a sieve table.
void BM_MobiusInverse_Serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(zeta::serial::mobius_inverse_zeta({2.0, 0.0}, st.range(0)));
}
void BM_MobiusInverse_Parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(zeta::mobius_inverse_zeta({2.0, 0.0}, st.range(0)));
}
BENCHMARK(BM_MobiusInverse_Serial)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MobiusInverse_Parallel)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_FindZeros_Serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(zeta::serial::find_zeros(10.0, 30.0));
}
void BM_FindZeros_Parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(zeta::find_zeros(10.0, 30.0));
}
BENCHMARK(BM_FindZeros_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindZeros_Parallel)->Unit(benchmark::kMillisecond);

const primes::PrimeSet& bench_primes() {
    static const primes::PrimeSet ps = primes::sieve(10'000);
    return ps;
}

void BM_VarpiGrid_Serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(primes::serial::varpi_grid(0.1, 5.0, 0.01, bench_primes()));
}
void BM_VarpiGrid_Parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(primes::varpi_grid(0.1, 5.0, 0.01, bench_primes()));
}
BENCHMARK(BM_VarpiGrid_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VarpiGrid_Parallel)->Unit(benchmark::kMillisecond);

fracdiff::SampledSignal bench_signal(std::int64_t n) {
    fracdiff::SampledSignal s{1e-3, std::vector<double>(static_cast<std::size_t>(n))};
    for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] = std::sin(s.time(i));
    return s;
}

void BM_GL_Serial(benchmark::State& st) {
    const auto s = bench_signal(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(fracdiff::serial::gl_differintegral(s, fracdiff::FracOrder(0.5)));
}
void BM_GL_Parallel(benchmark::State& st) {
    const auto s = bench_signal(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(fracdiff::gl_differintegral(s, fracdiff::FracOrder(0.5)));
}
BENCHMARK(BM_GL_Serial)->Arg(20'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GL_Parallel)->Arg(20'000)->Unit(benchmark::kMillisecond);

void BM_Sweep_Serial(benchmark::State& st) {
    const auto grid = transfer::frequency_grid(1e-3, 1e3, st.range(0), true);
    for (auto _ : st) benchmark::DoNotOptimize(transfer::serial::sweep({1, 1, 2.5}, grid));
}
void BM_Sweep_Parallel(benchmark::State& st) {
    const auto grid = transfer::frequency_grid(1e-3, 1e3, st.range(0), true);
    for (auto _ : st) benchmark::DoNotOptimize(transfer::sweep({1, 1, 2.5}, grid));
}
BENCHMARK(BM_Sweep_Serial)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep_Parallel)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
