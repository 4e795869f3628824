#include <benchmark/benchmark.h>

#include "bsy/integral.hpp"
#include "bsy/zeros.hpp"

namespace {

const bsy::PrecisionConfig kCfg{};

const bsy::ZeroList& zeros() {
  static const bsy::ZeroList list = bsy::find_zeros_up_to(400.0, kCfg);
  return list;
}

void BM_FindZeros(benchmark::State& state) {
  const double T = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bsy::find_zeros_up_to(T, kCfg));
}
BENCHMARK(BM_FindZeros)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_ComputeI(benchmark::State& state) {
  const double T = static_cast<double>(state.range(0));
  const auto& list = zeros();
  for (auto _ : state) benchmark::DoNotOptimize(bsy::compute_I(T, list, kCfg));
}
BENCHMARK(BM_ComputeI)->Arg(40)->Arg(160)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace
