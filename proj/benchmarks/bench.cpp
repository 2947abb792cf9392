#include <benchmark/benchmark.h>

#include <random>

#include "lustab/builtins.hpp"
#include "lustab/chords.hpp"
#include "lustab/discrete.hpp"
#include "lustab/majorana.hpp"
#include "lustab/stabilizer.hpp"

namespace {

using namespace lustab;

PureState random_symmetric(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    DickeCoefficients d{n, Vec(n + 1)};
    for (int k = 0; k <= n; ++k) d.d[k] = Complex(gauss(rng), gauss(rng));
    return dicke_reconstruct(d);
}

void bm_stabilizer_algebra(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PureState psi = random_symmetric(n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stabilizer_algebra(psi));
    }
}
BENCHMARK(bm_stabilizer_algebra)->DenseRange(3, 10);

void bm_enumerate_noncrossing(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_noncrossing(m));
    }
}
BENCHMARK(bm_enumerate_noncrossing)->DenseRange(2, 8);

void bm_majorana_roots(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PureState psi = random_symmetric(n, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(majorana_roots(psi));
    }
}
BENCHMARK(bm_majorana_roots)->DenseRange(3, 10);

void bm_finite_stabilizer_octahedron(benchmark::State& state) {
    const PureState tau = builtin_state("tau");
    for (auto _ : state) {
        benchmark::DoNotOptimize(finite_stabilizer(tau));
    }
}
BENCHMARK(bm_finite_stabilizer_octahedron);

}  // namespace

BENCHMARK_MAIN();
