#include <benchmark/benchmark.h>

#include "bsy/arith.hpp"
#include "bsy/dirichlet.hpp"
#include "bsy/resonator.hpp"

namespace {

bsy::ResonatorTable table(std::uint64_t N) {
  bsy::ResonatorParams p;
  p.mu = 1;
  p.N = N;
  p.h = 0.1;
  p.override = true;
  p.L = 1.0;
  p.A = 2.0;
  p.B = 200.0;
  return bsy::build_resonator(p, bsy::SignVariant::Plus);
}

void BM_Sieve(benchmark::State& state) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bsy::primes_between(2, hi));
}
BENCHMARK(BM_Sieve)->Arg(1 << 16)->Arg(1 << 22);

void BM_BuildResonator(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(table(N));
}
BENCHMARK(BM_BuildResonator)->Arg(10000)->Arg(1000000);

void BM_Numerator(benchmark::State& state) {
  const auto t = table(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bsy::resonator_numerator(t, 1, 0, 0.1));
  state.counters["entries"] = static_cast<double>(t.entries.size());
}
BENCHMARK(BM_Numerator)->Arg(10000)->Arg(1000000);

void BM_MeanSquareExact(benchmark::State& state) {
  auto t = table(100000);
  t.entries.resize(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bsy::mean_square_exact(t, 1000.0));
}
BENCHMARK(BM_MeanSquareExact)->Arg(50)->Arg(500);

}  // namespace
