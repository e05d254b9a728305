// Serial reference vs OpenMP kernels on dense sections.

#include <benchmark/benchmark.h>

#include "hardy/conjugations.hpp"
#include "hardy/kernels.hpp"
#include "hardy/random.hpp"

namespace {

using hardy::Complex;
namespace serial = hardy::kernels::serial;
namespace parallel = hardy::kernels::parallel;

std::vector<Complex> random_entries(std::size_t count, std::uint64_t seed) {
    hardy::Rng rng(seed);
    std::vector<Complex> v(count);
    for (Complex& z : v) {
        z = hardy::complex_gaussian(rng);
    }
    return v;
}

template <auto Kernel>
void BM_matmul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_entries(n * n, 1);
    const auto b = random_entries(n * n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(n, a, b));
    }
    state.SetComplexityN(state.range(0));
}

template <auto Kernel>
void BM_gram(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = hardy::random_unitary(n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(n, a.data()));
    }
}

template <auto Kernel>
void BM_symmetry_residual(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_entries(n * n, 4);
    const auto t = random_entries(n * n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(n, a, t, n));
    }
}

}  // namespace

BENCHMARK(BM_matmul<serial::matmul>)->Name("matmul/serial")->RangeMultiplier(2)->Range(64, 256);
BENCHMARK(BM_matmul<parallel::matmul>)->Name("matmul/parallel")->RangeMultiplier(2)->Range(64, 256);
BENCHMARK(BM_gram<serial::gram_residual>)->Name("gram_residual/serial")->RangeMultiplier(2)->Range(64, 256);
BENCHMARK(BM_gram<parallel::gram_residual>)->Name("gram_residual/parallel")->RangeMultiplier(2)->Range(64, 256);
BENCHMARK(BM_symmetry_residual<serial::symmetry_block_residual>)
    ->Name("symmetry_residual/serial")
    ->RangeMultiplier(2)
    ->Range(64, 256);
BENCHMARK(BM_symmetry_residual<parallel::symmetry_block_residual>)
    ->Name("symmetry_residual/parallel")
    ->RangeMultiplier(2)
    ->Range(64, 256);

BENCHMARK_MAIN();
