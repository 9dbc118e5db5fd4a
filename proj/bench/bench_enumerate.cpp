// Serial reference vs OpenMP kernels for the rooted search and the
// conjugacy reduction.

#include <benchmark/benchmark.h>

#include "modsub/enumerator.hpp"

namespace {

using namespace modsub;

SearchFilter genus(std::uint32_t g) {
  SearchFilter f;
  f.genus = g;
  return f;
}

void BM_RootedSerial(benchmark::State& state) {
  const auto mu = static_cast<std::size_t>(state.range(0));
  const auto filter = genus(static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_rooted_serial(mu, filter));
  }
}

void BM_RootedParallel(benchmark::State& state) {
  const auto mu = static_cast<std::size_t>(state.range(0));
  const auto filter = genus(static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_rooted(mu, filter));
  }
}

void BM_ReduceSerial(benchmark::State& state) {
  const auto rooted = enumerate_rooted(static_cast<std::size_t>(state.range(0)), genus(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjugacy_reduce_serial(rooted));
  }
}

void BM_ReduceParallel(benchmark::State& state) {
  const auto rooted = enumerate_rooted(static_cast<std::size_t>(state.range(0)), genus(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjugacy_reduce(rooted));
  }
}

}  // namespace

BENCHMARK(BM_RootedSerial)->Args({18, 0})->Args({24, 0})->Args({18, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootedParallel)->Args({18, 0})->Args({24, 0})->Args({18, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReduceSerial)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReduceParallel)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
