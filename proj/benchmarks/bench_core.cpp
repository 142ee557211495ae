#include <benchmark/benchmark.h>

#include "surfsing/blowup.hpp"
#include "surfsing/classify.hpp"
#include "surfsing/cover.hpp"
#include "surfsing/discrepancy.hpp"
#include "surfsing/document.hpp"

namespace {

using namespace surfsing;

ResolutionGraph chain(int n, int weight) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (int k = 1; k <= n; ++k) vs.push_back({"C" + std::to_string(k), weight});
  for (int k = 1; k < n; ++k) es.push_back({"C" + std::to_string(k), "C" + std::to_string(k + 1)});
  return ResolutionGraph(std::move(vs), es);
}

void BM_Discrepancies(benchmark::State& state) {
  const auto g = find_builtin("example5-2")->graph;
  for (auto _ : state) benchmark::DoNotOptimize(discrepancies(g));
}
BENCHMARK(BM_Discrepancies);

// Long chains with steep weights push the solve onto the GMP path.
void BM_DiscrepanciesChain(benchmark::State& state) {
  const auto g = chain(static_cast<int>(state.range(0)), -7);
  for (auto _ : state) benchmark::DoNotOptimize(discrepancies(g));
}
BENCHMARK(BM_DiscrepanciesChain)->Arg(8)->Arg(32)->Arg(128);

void BM_FundamentalCycle(benchmark::State& state) {
  const auto g = find_builtin("E8")->graph;
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_cycle(g));
}
BENCHMARK(BM_FundamentalCycle);

void BM_CoverStep(benchmark::State& state) {
  const auto g = find_builtin("example5-2")->graph;
  const auto p = discrepancies(g);
  for (auto _ : state) benchmark::DoNotOptimize(cover_step(g, p, 3));
}
BENCHMARK(BM_CoverStep);

void BM_BlowUp(benchmark::State& state) {
  const auto g = find_builtin("example5-1")->graph;
  const auto p = discrepancies(g);
  for (auto _ : state) benchmark::DoNotOptimize(blow_up(g, p, EdgePoint{"C1", "C4"}));
}
BENCHMARK(BM_BlowUp);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    enumerate_graphs(n, -7, [&](const ResolutionGraph&) { return ++count, true; });
  }
  state.counters["graphs"] = static_cast<double>(count);
}
BENCHMARK(BM_Enumerate)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
