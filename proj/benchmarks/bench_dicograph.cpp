#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "dicograph/decomposition.hpp"
#include "dicograph/digraph.hpp"
#include "dicograph/miner.hpp"
#include "dicograph/patterns.hpp"
#include "dicograph/recognizers.hpp"

using namespace dicograph;

namespace {

Digraph random_digraph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng)) g.add_arc(u, v);
  return g;
}

// Threshold digraph with about 4n arcs and shuffled labels.
std::vector<Arc> threshold_arcs(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(0, 1);
  std::uniform_int_distribution<int> kind(1, 3);
  std::string digits = "1";
  for (int i = 1; i < n; ++i) digits += unit(rng) < 4.0 / i ? static_cast<char>('0' + kind(rng)) : '0';
  auto arcs = replay_arcs(digits);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : arcs) {
    u = perm[u];
    v = perm[v];
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return arcs;
}

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937 rng(1);
  const Digraph g = random_digraph(static_cast<int>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CanonicalFormSymmetric(benchmark::State& state) {
  const Digraph g = complement(Digraph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormSymmetric)->Arg(8)->Arg(32)->Arg(64);

void BM_CreationSequence(benchmark::State& state) {
  std::mt19937 rng(2);
  const int n = static_cast<int>(state.range(0));
  const auto arcs = threshold_arcs(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(creation_sequence(n, arcs, true));
  state.SetComplexityN(n + static_cast<std::int64_t>(arcs.size()));
}
BENCHMARK(BM_CreationSequence)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

void BM_DiCoTree(benchmark::State& state) {
  std::mt19937 rng(3);
  const int n = static_cast<int>(state.range(0));
  // Random expression built by repeated splitting.
  Digraph g(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::uniform_int_distribution<int> op(0, 2);
  auto build = [&](auto&& self, int lo, int hi) -> void {
    if (hi - lo <= 1) return;
    const int mid = lo + 1 + static_cast<int>(rng() % static_cast<unsigned>(hi - lo - 1));
    self(self, lo, mid);
    self(self, mid, hi);
    const int kind = op(rng);
    for (int a = lo; a < mid; ++a)
      for (int b = mid; b < hi; ++b) {
        if (kind >= 1) g.add_arc(order[a], order[b]);
        if (kind == 2) g.add_arc(order[b], order[a]);
      }
  };
  build(build, 0, n);
  for (auto _ : state) benchmark::DoNotOptimize(di_co_tree(g));
}
BENCHMARK(BM_DiCoTree)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_PatternSearch(benchmark::State& state) {
  std::mt19937 rng(4);
  const Digraph g = random_digraph(static_cast<int>(state.range(0)), 0.5, rng);
  const auto& pats = all_patterns();
  for (auto _ : state) {
    int found = 0;
    for (const auto& p : pats) found += contains_induced(g, p).has_value();
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_PatternSearch)->Arg(8)->Arg(16)->Arg(32);

void BM_Classify(benchmark::State& state) {
  std::mt19937 rng(5);
  const Digraph g = random_digraph(static_cast<int>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify)->Arg(5)->Arg(16);

void BM_EnumerateUndirected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_undirected(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateUndirected)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

// The digraph enumeration is cached after its first call, so this measures
// mining on a warm cache.
void BM_MineDC(benchmark::State& state) {
  enumerate_digraphs(5);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_forbidden(ClassId::DC, 5));
}
BENCHMARK(BM_MineDC)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
