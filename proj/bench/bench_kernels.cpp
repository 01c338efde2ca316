// Serial reference kernels against their OpenMP versions on dense exact
// matrices. Run with OMP_NUM_THREADS to vary the thread count.
#include <benchmark/benchmark.h>

#include <random>

#include "weyrkit/exactmat/kernels.hpp"
#include "weyrkit/exactmat/linalg.hpp"

namespace {

using weyrkit::Matrix;
using weyrkit::Rational;
using weyrkit::kernels::Exec;

Matrix random_matrix(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = Rational(num(rng), den(rng));
        }
    }
    return m;
}

template <Exec exec>
void BM_Matmul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_matrix(n, 1);
    const Matrix b = random_matrix(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(weyrkit::matmul(a, b, exec));
    }
    state.SetComplexityN(state.range(0));
}

template <Exec exec>
void BM_Rref(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_matrix(n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(weyrkit::rref(a, exec));
    }
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Matmul<Exec::serial>)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Matmul<Exec::parallel>)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rref<Exec::serial>)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rref<Exec::parallel>)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
