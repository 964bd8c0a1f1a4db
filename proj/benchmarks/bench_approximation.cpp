#include <benchmark/benchmark.h>

#include <vector>

#include "hyperbessel/approximation.hpp"
#include "hyperbessel/kernels.hpp"
#include "hyperbessel/reference.hpp"

namespace hb = hyperbessel;

namespace {

std::vector<double> grid() {
  std::vector<double> zs;
  for (int i = 0; i < 64; ++i) zs.push_back(0.5 + 3.5 * i / 63.0);
  return zs;
}

template <class F>
void sweep(benchmark::State& state, F&& f) {
  const auto zs = grid();
  for (auto _ : state) {
    for (double z : zs) benchmark::DoNotOptimize(f(z));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(zs.size()));
}

void BM_ApproximantI(benchmark::State& state) {
  const hb::Approximant<double> approx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  sweep(state, [&](double z) { return approx.I(z); });
}

void BM_ApproximantJ(benchmark::State& state) {
  const hb::Approximant<double> approx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  sweep(state, [&](double z) { return approx.J(z); });
}

void BM_ReferenceI(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sweep(state, [&](double z) { return hb::ref_I(n, z); });
}

void BM_ReferenceJ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sweep(state, [&](double z) { return hb::ref_J(n, z); });
}

void BM_PlatformI(benchmark::State& state) {
  const double n = static_cast<double>(state.range(0));
  sweep(state, [&](double z) { return std::cyl_bessel_i(n, z); });
}

void BM_ExtendedApproximantI(benchmark::State& state) {
  const hb::Approximant<hb::Extended> approx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  sweep(state, [&](double z) { return approx.I(hb::Extended(z)); });
}

void BM_Kernels(benchmark::State& state) {
  const auto nodes = hb::make_nodes(static_cast<int>(state.range(1)));
  const int q_max = static_cast<int>(state.range(0));
  sweep(state, [&](double z) { return hb::evaluate_kernels(q_max, nodes, z, hb::KernelFamily::Hyperbolic); });
}

void orders_and_p(benchmark::internal::Benchmark* b) {
  for (int p : {1, 2, 4, 8}) {
    for (int n : {0, 1, 3}) {
      if (n < 4 * p) b->Args({n, p});
    }
  }
}

}  // namespace

BENCHMARK(BM_ApproximantI)->Apply(orders_and_p);
BENCHMARK(BM_ApproximantJ)->Apply(orders_and_p);
BENCHMARK(BM_ReferenceI)->DenseRange(0, 3);
BENCHMARK(BM_ReferenceJ)->DenseRange(0, 3);
BENCHMARK(BM_PlatformI)->DenseRange(0, 3);
BENCHMARK(BM_ExtendedApproximantI)->Args({0, 2})->Args({3, 2});
BENCHMARK(BM_Kernels)->Args({3, 2})->Args({8, 8});
BENCHMARK_MAIN();
