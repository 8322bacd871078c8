#include <benchmark/benchmark.h>

#include "ngraph/empires.hpp"
#include "ngraph/formula.hpp"
#include "ngraph/generate.hpp"
#include "ngraph/sequentialize.hpp"
#include "ngraph/switching.hpp"

using namespace ngraph;

namespace {

ProofGraph sample_graph(int max_links) {
  GeneratorSpec spec;
  spec.seed = 41;
  spec.max_links = max_links;
  spec.kind_weights[LinkKind::Contraction] = 3.0;
  spec.kind_weights[LinkKind::Expansion] = 3.0;
  return generate_sound(spec);
}

} // namespace

static void BM_ParseFormula(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        parse_formula("(a->b)->((~a|c)&(b->c))->(a|b->c&~d)"));
}
BENCHMARK(BM_ParseFormula);

static void BM_SoundnessCheck(benchmark::State& state) {
  ProofGraph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_ngraph(g).sound);
  state.counters["switchables"] =
      static_cast<double>(switchable_links(g).size());
}
BENCHMARK(BM_SoundnessCheck)->Arg(8)->Arg(12)->Arg(16);

static void BM_EmpireClosure(benchmark::State& state) {
  ProofGraph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (int i = 0; i < g.node_count(); ++i) {
      benchmark::DoNotOptimize(empire_closure_set(g, i, Side::North));
      benchmark::DoNotOptimize(empire_closure_set(g, i, Side::South));
    }
}
BENCHMARK(BM_EmpireClosure)->Arg(8)->Arg(16);

static void BM_EmpireOracle(benchmark::State& state) {
  ProofGraph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(empire_by_intersection(g, 0, Side::North));
}
BENCHMARK(BM_EmpireOracle)->Arg(8)->Arg(12);

static void BM_Sequentialize(benchmark::State& state) {
  ProofGraph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sequentialize(g).rule);
}
BENCHMARK(BM_Sequentialize)->Arg(8)->Arg(12);

static void BM_Generate(benchmark::State& state) {
  GeneratorSpec spec;
  spec.max_links = static_cast<int>(state.range(0));
  uint64_t seed = 0;
  for (auto _ : state) {
    spec.seed = ++seed;
    benchmark::DoNotOptimize(generate_sound(spec).link_count());
  }
}
BENCHMARK(BM_Generate)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
