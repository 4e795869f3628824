#include <benchmark/benchmark.h>

#include <complex>

#include "bsy/zeta.hpp"

namespace {

const bsy::PrecisionConfig kCfg{};

void BM_ZetaEm(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bsy::zeta_em({0.5, t}, kCfg));
}
BENCHMARK(BM_ZetaEm)->Arg(20)->Arg(1000)->Arg(10000);

void BM_HardyZRiemannSiegel(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bsy::hardy_z_rs(t, kCfg));
}
BENCHMARK(BM_HardyZRiemannSiegel)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_VerticalGrid(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::complex<double> last;
    bsy::zeta_vertical_grid(0.5, 1000.0, 0.01, count, kCfg,
                            [&](std::size_t, std::complex<double> z) { last = z; });
    benchmark::DoNotOptimize(last);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VerticalGrid)->Arg(64)->Arg(1024);

void BM_LogZetaBranch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bsy::log_zeta_branch(0.5, 500.5, kCfg));
}
BENCHMARK(BM_LogZetaBranch);

}  // namespace
