#include <benchmark/benchmark.h>

#include <map>

#include "segame/entropy.hpp"
#include "segame/game.hpp"
#include "segame/generators.hpp"
#include "segame/overlap.hpp"

using namespace segame;

namespace {

const PlantedGraph& planted(NodeId n) {
  static std::map<NodeId, PlantedGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, sparse_planted_partition(n, 100, 15.0, 0.2, n)).first;
  return it->second;
}

}  // namespace

static void BM_DeltaTransfer(benchmark::State& state) {
  const Graph& g = planted(10000).graph;
  const PartitionState s = init_singletons(g);
  LinkAccumulator acc(g.node_count());
  const double vol = g.total_volume();
  NodeId x = 0;
  for (auto _ : state) {
    acc.gather(g, x, [&](NodeId y) { return s.assignment[y]; });
    const CommunityId own = s.assignment[x];
    const NodeProfile node = NodeProfile::of(g, x);
    double best = 0.0;
    for (CommunityId c : acc.communities()) {
      if (c == own) continue;
      best = std::max(best, delta_transfer(vol, s.stats[own], acc.links(own), s.stats[c],
                                           acc.links(c), node));
    }
    benchmark::DoNotOptimize(best);
    x = (x + 1) % g.node_count();
  }
}
BENCHMARK(BM_DeltaTransfer);

static void BM_BestStrategy(benchmark::State& state) {
  const Graph& g = planted(10000).graph;
  const PartitionState s = init_singletons(g);
  LinkAccumulator acc(g.node_count());
  NodeId x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_strategy(g, s, x, StrategyRule::leave_baseline, acc));
    x = (x + 1) % g.node_count();
  }
}
BENCHMARK(BM_BestStrategy);

// Full detection; the range is the node count.
static void BM_Detect(benchmark::State& state) {
  const Graph& g = planted(static_cast<NodeId>(state.range(0))).graph;
  DetectorConfig config;
  config.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(detect_nonoverlapping(g, config));
  state.SetItemsProcessed(state.iterations() * g.node_count());
}
BENCHMARK(BM_Detect)
    ->ArgsProduct({{10000, 20000, 40000}, {1, 2}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

static void BM_Overlap(benchmark::State& state) {
  const Graph& g = planted(static_cast<NodeId>(state.range(0))).graph;
  const PartitionState s = detect_nonoverlapping(g, DetectorConfig{});
  for (auto _ : state) benchmark::DoNotOptimize(detect_overlapping(g, s, DetectorConfig{}));
}
BENCHMARK(BM_Overlap)->Arg(10000)->Arg(40000)->Unit(benchmark::kMillisecond);

static void BM_Entropy2D(benchmark::State& state) {
  const Graph& g = planted(10000).graph;
  const Cover c = detect_nonoverlapping(g, DetectorConfig{}).to_cover();
  for (auto _ : state) benchmark::DoNotOptimize(entropy_2d(g, c));
}
BENCHMARK(BM_Entropy2D)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
