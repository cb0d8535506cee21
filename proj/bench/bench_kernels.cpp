// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "hill/kernels.hpp"
#include "hill/schoebi.hpp"
#include "hill/two_tile.hpp"

using namespace hill;

namespace {

constexpr std::size_t kPoints = 1 << 15;

template <bool Parallel>
void BM_Sample(benchmark::State& state) {
  const auto spec = make_simplex(static_cast<int>(state.range(0)), 0.0);
  for (auto _ : state) {
    auto p = Parallel ? parallel::sample_simplex(spec, kPoints, 1) : reference::sample_simplex(spec, kPoints, 1);
    benchmark::DoNotOptimize(p.data().data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kPoints));
}

template <bool Parallel>
void BM_Theta(benchmark::State& state) {
  const auto x = reference::sample_simplex(make_simplex(static_cast<int>(state.range(0)), 0.0), kPoints, 2);
  for (auto _ : state) {
    auto y = Parallel ? parallel::theta_batch(x, kDomainTolerance) : reference::theta_batch(x, kDomainTolerance);
    benchmark::DoNotOptimize(y.points.data().data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kPoints));
}

template <bool Parallel>
void BM_ThetaInverse(benchmark::State& state) {
  const auto y = reference::sample_brick(static_cast<int>(state.range(0)), kPoints, 3);
  for (auto _ : state) {
    auto x = Parallel ? parallel::theta_inverse_batch(y, kDomainTolerance)
                      : reference::theta_inverse_batch(y, kDomainTolerance);
    benchmark::DoNotOptimize(x.points.data().data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kPoints));
}

template <bool Parallel>
void BM_DnCensus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = Parallel ? parallel::dn_census(n, kPoints, 4) : reference::dn_census(n, kPoints, 4);
    benchmark::DoNotOptimize(c.offsets.size());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kPoints));
}

}  // namespace

BENCHMARK(BM_Sample<false>)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sample<true>)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Theta<false>)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Theta<true>)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaInverse<false>)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaInverse<true>)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DnCensus<false>)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DnCensus<true>)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
