#include "segame/game.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "game_internal.hpp"

namespace segame {

void DetectorConfig::validate() const {
  if (!(tau_n > 0.0 && tau_n < 1.0)) throw ValidationError("tau_n must lie in (0, 1)");
  if (!(gamma >= 0.0)) throw ValidationError("gamma must be >= 0");
  if (max_iterations < 0) throw ValidationError("max_iterations must be >= 0");
  if (workers < 1) throw ValidationError("workers must be >= 1");
}

Cover PartitionState::to_cover() const { return Cover::from_assignment(assignment); }

PartitionState init_singletons(const Graph& graph) {
  const NodeId n = graph.node_count();
  PartitionState state;
  state.assignment.resize(n);
  std::iota(state.assignment.begin(), state.assignment.end(), CommunityId{0});
  state.stats.resize(n);
  for (NodeId x = 0; x < n; ++x) {
    const double d = graph.degree(x);
    state.stats[x] = {d, d - graph.self_loop(x), 1};
  }
  state.live_communities = n;
  return state;
}

std::vector<CommunityStats> recompute_stats(const Graph& graph,
                                            std::span<const CommunityId> assignment) {
  std::vector<CommunityStats> stats(graph.node_count());
  for (NodeId x = 0; x < graph.node_count(); ++x) {
    const CommunityId c = assignment[x];
    CommunityStats& s = stats.at(c);
    ++s.size;
    s.volume += graph.degree(x);
    for (const Adjacent& a : graph.in_neighbors(x)) {
      if (assignment[a.node] != c) s.cut += a.weight;
    }
  }
  return stats;
}

double stats_deviation(const Graph& graph, const PartitionState& state) {
  const auto fresh = recompute_stats(graph, state.assignment);
  double worst = 0.0;
  std::size_t live = 0;
  for (std::size_t c = 0; c < fresh.size(); ++c) {
    const CommunityStats& cached = state.stats[c];
    if (cached.size != fresh[c].size) return std::numeric_limits<double>::infinity();
    if (fresh[c].size > 0) ++live;
    worst = std::max({worst, std::abs(cached.volume - fresh[c].volume),
                      std::abs(cached.cut - fresh[c].cut)});
  }
  if (live != state.live_communities) return std::numeric_limits<double>::infinity();
  return worst;
}

LinkAccumulator::LinkAccumulator(NodeId node_count)
    : links_(node_count), seen_(node_count, 0) {}

void LinkAccumulator::clear() noexcept {
  for (CommunityId c : touched_) {
    links_[c] = {};
    seen_[c] = 0;
  }
  touched_.clear();
}

void LinkAccumulator::add(CommunityId c, double in, double out) {
  if (c >= links_.size()) {
    links_.resize(static_cast<std::size_t>(c) + 1);
    seen_.resize(static_cast<std::size_t>(c) + 1, 0);
  }
  if (!seen_[c]) {
    seen_[c] = 1;
    touched_.push_back(c);
  }
  links_[c].in += in;
  links_[c].out += out;
}

Strategy best_strategy(const Graph& graph, const PartitionState& state, NodeId x,
                       StrategyRule rule, LinkAccumulator& scratch, LogBase base) {
  scratch.gather(graph, x, [&](NodeId y) { return state.assignment[y]; });
  return detail::evaluate_strategy(graph, x, state.assignment[x], rule, base, scratch,
                                   [&](CommunityId c) { return state.stats[c]; });
}

Strategy best_strategy(const Graph& graph, const PartitionState& state, NodeId x,
                       StrategyRule rule, LogBase base) {
  LinkAccumulator scratch(graph.node_count());
  return best_strategy(graph, state, x, rule, scratch, base);
}

void apply_transfer(const Graph& graph, PartitionState& state, NodeId x, CommunityId src,
                    CommunityId dst, NodeLinks src_links, NodeLinks dst_links) {
  if (state.assignment.at(x) != src) throw std::logic_error("apply_transfer: node not in source");
  if (src == dst) throw std::logic_error("apply_transfer: source equals destination");
  const NodeProfile node = NodeProfile::of(graph, x);
  state.stats[src] = leave_stats(state.stats[src], node, src_links);
  if (state.stats[dst].size == 0) ++state.live_communities;
  state.stats[dst] = join_stats(state.stats[dst], node, dst_links);
  state.assignment[x] = dst;
  if (state.stats[src].size == 0) {
    state.stats[src] = {};
    --state.live_communities;
  }
}

bool check_termination(std::size_t moved, double delta_sum, double baseline, double tau_n,
                       std::size_t node_count) noexcept {
  if (moved == 0) return true;
  return delta_sum / static_cast<double>(moved) <=
         tau_n / static_cast<double>(node_count) * baseline;
}

namespace {

SweepRecord sequential_sweep(const Graph& graph, PartitionState& state,
                             std::span<const NodeId> order, const DetectorConfig& config,
                             LinkAccumulator& scratch, const DetectionHooks& hooks) {
  SweepRecord record;
  for (NodeId x : order) {
    const CommunityId own = state.assignment[x];
    const Strategy s = best_strategy(graph, state, x, config.rule, scratch, config.log_base);
    if (s.stays()) continue;
    apply_transfer(graph, state, x, own, *s.target, scratch.links(own), scratch.links(*s.target));
    ++record.moved;
    record.delta_sum += s.delta;
    if (hooks.on_transfer) hooks.on_transfer(state, x, own, *s.target, s.delta);
  }
  return record;
}

}  // namespace

PartitionState detect_nonoverlapping(const Graph& graph, const DetectorConfig& config,
                                     const DetectionHooks& hooks) {
  config.validate();
  PartitionState state = init_singletons(graph);

  std::vector<NodeId> order;
  order.reserve(graph.node_count());
  for (NodeId x = 0; x < graph.node_count(); ++x) {
    if (!graph.isolated(x)) order.push_back(x);
  }
  if (order.empty()) return state;

  const double baseline = node_entropy_baseline(graph, config.log_base);
  std::mt19937_64 rng(config.ordering_seed.value_or(0));
  LinkAccumulator scratch(graph.node_count());

  while (state.iterations() < static_cast<std::size_t>(config.max_iterations)) {
    if (config.ordering_seed) std::shuffle(order.begin(), order.end(), rng);
    const auto start = std::chrono::steady_clock::now();
    SweepRecord record = config.workers > 1
                             ? detail::parallel_sweep(graph, state, order, config, hooks)
                             : sequential_sweep(graph, state, order, config, scratch, hooks);
    record.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    state.sweeps.push_back(record);
    if (hooks.on_sweep) hooks.on_sweep(state, record);
    if (check_termination(record.moved, record.delta_sum, baseline, config.tau_n,
                          graph.node_count())) {
      break;
    }
  }
  return state;
}

}  // namespace segame
