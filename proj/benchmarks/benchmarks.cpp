#include <benchmark/benchmark.h>

#include "injwords/characters.hpp"
#include "injwords/poset.hpp"
#include "injwords/rank_selection.hpp"
#include "injwords/rsk.hpp"
#include "injwords/table.hpp"
#include "injwords/tau.hpp"

using namespace injwords;

static void BM_CharacterValueDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& ps = partitions_of(n);
  for (auto _ : state) {
    Int sink = 0;
    for (const auto& lambda : ps)
      for (const auto& mu : ps) sink += character_value_direct(lambda, mu);
    benchmark::DoNotOptimize(sink);
  }
}
BENCHMARK(BM_CharacterValueDirect)->DenseRange(4, 8);

static void BM_DecomposeRegular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClassFunction reg = regular_character(n);
  for (auto _ : state) {
    auto m = decompose(reg);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_DecomposeRegular)->DenseRange(5, 9);

static void BM_AlphaOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InjectiveWordPoset poset(n, 1);
  const RankSet s({2, n - 1});
  for (auto _ : state) {
    auto a = alpha_character(poset, s);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_AlphaOracle)->DenseRange(4, 6);

static void BM_ChainCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InjectiveWordPoset poset(n, 2);
  std::vector<int> e;
  for (int i = 1; i <= n; ++i) e.push_back(i);
  const RankSet full(std::move(e));
  for (auto _ : state) {
    Int c = chain_count(poset, full);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ChainCount)->DenseRange(3, 5);

static void BM_TauParityCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition lambda = partitions_of(n)[partitions_of(n).size() / 2];
  const RankSet s({1, n - 1});
  for (auto _ : state) {
    auto pc = tau_parity_count(n, 2, s, lambda);
    benchmark::DoNotOptimize(pc);
  }
}
BENCHMARK(BM_TauParityCount)->DenseRange(4, 7);

static void BM_TableTau(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = compute_beta_table_full(n, 2, Method::tau,
                                     InjectiveWordPoset::default_budget(), 1);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TableTau)->DenseRange(3, 5);

static void BM_TableClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = compute_beta_table_full(n, 2, Method::closed,
                                     InjectiveWordPoset::default_budget(), 1);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TableClosed)->DenseRange(3, 6);

static void BM_ColoredRsk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Int boxes = 0;
    for_each_colored_permutation(n, 2, [&](const ColoredPermutation& u) {
      auto [p, q] = colored_rsk(u);
      boxes += p.n();
    });
    benchmark::DoNotOptimize(boxes);
  }
}
BENCHMARK(BM_ColoredRsk)->DenseRange(3, 5);

BENCHMARK_MAIN();
