// Bracket engines on corpus diagrams and their cables, and incremental
// versus from-scratch face counting over Gray-code subgraph walks.

#include <benchmark/benchmark.h>

#include <bit>
#include <string>

#include "jonesdeg/bracket.hpp"
#include "jonesdeg/corpus.hpp"
#include "jonesdeg/states.hpp"

namespace {

using namespace jonesdeg;

LinkDiagram entry(const std::string& name) {
  for (const auto& e : load_corpus(JONESDEG_CORPUS)) {
    if (e.name == name) return e.diagram;
  }
  throw std::runtime_error("no corpus entry " + name);
}

const LinkDiagram& figure_eight() {
  static const LinkDiagram d = entry("figure_eight");
  return d;
}

void BM_StateSum(benchmark::State& st) {
  const LinkDiagram d = cable(entry("trefoil_left"), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(tally_statesum(d));
  st.SetLabel(std::to_string(d.crossing_count()) + " crossings");
}
BENCHMARK(BM_StateSum)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Subgraph(benchmark::State& st) {
  BracketOptions opt;
  opt.incremental = st.range(1) != 0;
  const LinkDiagram d = cable(entry("trefoil_left"), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(tally_subgraph(d, opt));
  st.SetLabel(std::to_string(d.crossing_count()) + " crossings" + (opt.incremental ? ", incremental" : ", scratch"));
}
BENCHMARK(BM_Subgraph)->Args({1, 0})->Args({1, 1})->Args({2, 0})->Args({2, 1})->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& st) {
  const LinkDiagram d = cable(figure_eight(), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(tally_fast(d));
  st.SetLabel(std::to_string(d.crossing_count()) + " crossings");
}
BENCHMARK(BM_Sweep)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

// Whole Gray-code walk over the all-A graph of the 2-cabled figure-eight
// restricted to its first k edges.
void BM_FacesScratch(benchmark::State& st) {
  const RibbonGraph g = ribbon_graph_a(cable(figure_eight(), 2));
  const int k = static_cast<int>(st.range(0));
  for (auto _ : st) {
    long total = 0;
    SpanningSubgraph h = SpanningSubgraph::none(g.edge_count());
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
      const int e = std::countr_zero(i);
      h.edges[static_cast<std::size_t>(e)] ^= 1;
      total += faces(g, h);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_FacesScratch)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_FacesIncremental(benchmark::State& st) {
  const RibbonGraph g = ribbon_graph_a(cable(figure_eight(), 2));
  const int k = static_cast<int>(st.range(0));
  for (auto _ : st) {
    long total = 0;
    IncrementalFaces inc(g);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) total += inc.toggle(std::countr_zero(i));
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_FacesIncremental)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
