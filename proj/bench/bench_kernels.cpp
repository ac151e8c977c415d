// Serial reference vs OpenMP lane for every dense kernel, plus the
// end-to-end property suite.  Run with --benchmark_filter=... to narrow.

#include <benchmark/benchmark.h>

#include <vector>

#include "substoch/inequalities.hpp"
#include "substoch/kernels.hpp"
#include "substoch/random.hpp"

using namespace substoch;

namespace {

std::vector<double> sample_data(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<double> v(count);
    for (auto& x : v) x = rng.uniform();
    return v;
}

void bm_matvec_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = sample_data(1, n * n);
    const auto x = sample_data(2, n);
    std::vector<double> y(n);
    for (auto _ : state) {
        kernels::serial::matvec(a, n, n, x, y);
        benchmark::DoNotOptimize(y.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n * n));
}

void bm_matvec_openmp(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = sample_data(1, n * n);
    const auto x = sample_data(2, n);
    std::vector<double> y(n);
    for (auto _ : state) {
        kernels::openmp::matvec(a, n, n, x, y);
        benchmark::DoNotOptimize(y.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n * n));
}

void bm_matmul_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = sample_data(3, n * n);
    const auto b = sample_data(4, n * n);
    std::vector<double> c(n * n);
    for (auto _ : state) {
        kernels::serial::matmul(a, b, n, c);
        benchmark::DoNotOptimize(c.data());
        benchmark::ClobberMemory();
    }
}

void bm_matmul_openmp(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = sample_data(3, n * n);
    const auto b = sample_data(4, n * n);
    std::vector<double> c(n * n);
    for (auto _ : state) {
        kernels::openmp::matmul(a, b, n, c);
        benchmark::DoNotOptimize(c.data());
        benchmark::ClobberMemory();
    }
}

void bm_lu_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto base = sample_data(5, n * n);
    for (std::size_t i = 0; i < n; ++i) base[i * n + i] += static_cast<double>(n);
    std::vector<std::size_t> perm(n);
    for (auto _ : state) {
        auto a = base;
        benchmark::DoNotOptimize(kernels::serial::lu_factor(a, n, perm));
        benchmark::ClobberMemory();
    }
}

void bm_lu_openmp(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto base = sample_data(5, n * n);
    for (std::size_t i = 0; i < n; ++i) base[i * n + i] += static_cast<double>(n);
    std::vector<std::size_t> perm(n);
    for (auto _ : state) {
        auto a = base;
        benchmark::DoNotOptimize(kernels::openmp::lu_factor(a, n, perm));
        benchmark::ClobberMemory();
    }
}

void bm_geometric_mean_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto f1 = sample_data(6, n);
    const auto f2 = sample_data(7, n);
    const std::vector<std::span<const double>> fs = {f1, f2};
    const std::vector<double> alphas = {0.3, 0.7};
    std::vector<double> h(n);
    for (auto _ : state) {
        kernels::serial::geometric_mean(fs, alphas, h);
        benchmark::DoNotOptimize(h.data());
        benchmark::ClobberMemory();
    }
}

void bm_geometric_mean_openmp(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto f1 = sample_data(6, n);
    const auto f2 = sample_data(7, n);
    const std::vector<std::span<const double>> fs = {f1, f2};
    const std::vector<double> alphas = {0.3, 0.7};
    std::vector<double> h(n);
    for (auto _ : state) {
        kernels::openmp::geometric_mean(fs, alphas, h);
        benchmark::DoNotOptimize(h.data());
        benchmark::ClobberMemory();
    }
}

// trial-level parallelism: the suite itself is the hot loop of `verify`
void bm_property_suite(benchmark::State& state) {
    TrialConfig config;
    config.seed = 42;
    config.trials = static_cast<std::size_t>(state.range(0));
    config.n_max = 12;
    for (auto _ : state) {
        const auto reports = run_property_suite(config);
        benchmark::DoNotOptimize(reports.data());
    }
}

BENCHMARK(bm_matvec_serial)->Arg(128)->Arg(512)->Arg(2048);
BENCHMARK(bm_matvec_openmp)->Arg(128)->Arg(512)->Arg(2048)->UseRealTime();
BENCHMARK(bm_matmul_serial)->Arg(128)->Arg(384);
BENCHMARK(bm_matmul_openmp)->Arg(128)->Arg(384)->UseRealTime();
BENCHMARK(bm_lu_serial)->Arg(128)->Arg(512);
BENCHMARK(bm_lu_openmp)->Arg(128)->Arg(512)->UseRealTime();
BENCHMARK(bm_geometric_mean_serial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(bm_geometric_mean_openmp)->Arg(1 << 12)->Arg(1 << 16)->UseRealTime();
BENCHMARK(bm_property_suite)->Arg(50)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
