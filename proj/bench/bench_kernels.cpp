// Serial reference drivers against the OpenMP drivers on the same grids.
#include <benchmark/benchmark.h>

#include <vector>

#include "subres/grid.hpp"
#include "subres/kernels.hpp"

using namespace subres;

namespace {

const ModeTable& table() {
  static const ModeTable t(ForcingParams(2, 3), Truncation(500));
  return t;
}

std::vector<double> grid(benchmark::State& state) {
  return make_grid({0.0, 1e4, static_cast<std::size_t>(state.range(0)), Spacing::linear});
}

template <Execution exec>
void solution(benchmark::State& state) {
  const auto g = grid(state);
  std::vector<Sample> out(g.size());
  for (auto _ : state) {
    kernels::solution(table(), g, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

template <Execution exec>
void decomposition(benchmark::State& state) {
  const auto g = grid(state);
  std::vector<SeriesDecomposition> out(g.size());
  for (auto _ : state) {
    kernels::decomposition(table(), g, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

}  // namespace

BENCHMARK(solution<Execution::serial>)->Arg(1 << 10)->Arg(1 << 13);
BENCHMARK(solution<Execution::parallel>)->Arg(1 << 10)->Arg(1 << 13);
BENCHMARK(decomposition<Execution::serial>)->Arg(1 << 10)->Arg(1 << 13);
BENCHMARK(decomposition<Execution::parallel>)->Arg(1 << 10)->Arg(1 << 13);

BENCHMARK_MAIN();
