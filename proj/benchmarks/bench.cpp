#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hypermap/coordinates.hpp"
#include "hypermap/foliations.hpp"
#include "hypermap/hyperbolicity.hpp"
#include "hypermap/oracle.hpp"
#include "hypermap/tangency.hpp"

using namespace hypermap;

namespace {

std::vector<double> heights(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (double& y : v) y = u(rng);
  return v;
}

void BM_ThetaField(benchmark::State& state) {
  const MapParams params(static_cast<double>(state.range(0)));
  const auto ys = heights(4096);
  for (auto _ : state) {
    for (double y : ys) benchmark::DoNotOptimize(theta_field(y, params, Time::forward));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ys.size()));
}
BENCHMARK(BM_ThetaField)->Arg(1)->Arg(100);

void BM_Svd2Oracle(benchmark::State& state) {
  const MapParams params(10.0);
  const auto ys = heights(4096);
  for (auto _ : state) {
    for (double y : ys) {
      benchmark::DoNotOptimize(oracle::svd2(jacobian({0.0, y}, params, Time::forward)));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ys.size()));
}
BENCHMARK(BM_Svd2Oracle);

void BM_TraceLeaf(benchmark::State& state) {
  const MapParams params(10.0);
  TraceOptions open;
  open.detect_closure = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_leaf(FieldId::F1, {0.0, 0.501}, params, 1e-3, 10.0, open));
  }
}
BENCHMARK(BM_TraceLeaf)->Unit(benchmark::kMillisecond);

void BM_VerifyCones(benchmark::State& state) {
  const MapParams params(100.0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_cones(params, 5, state.range(0), 42));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VerifyCones)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_TangencyCurve(benchmark::State& state) {
  const MapParams params(10.0);
  for (auto _ : state) benchmark::DoNotOptimize(tangency_curve(params, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TangencyCurve)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_NoTangencyScan(benchmark::State& state) {
  const MapParams params(10.0);
  for (auto _ : state) benchmark::DoNotOptimize(no_tangency_scan(params, 256));
}
BENCHMARK(BM_NoTangencyScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
