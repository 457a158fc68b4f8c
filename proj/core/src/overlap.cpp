#include "segame/overlap.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace segame {

namespace {

NodeLinks links_to(const Graph& graph, const PartitionState& state, NodeId x, CommunityId c) {
  NodeLinks links;
  for (const Adjacent& a : graph.out_neighbors(x)) {
    if (a.node != x && state.assignment[a.node] == c) links.out += a.weight;
  }
  if (graph.directed()) {
    for (const Adjacent& a : graph.in_neighbors(x)) {
      if (a.node != x && state.assignment[a.node] == c) links.in += a.weight;
    }
  } else {
    links.in = links.out;
  }
  return links;
}

// Per-member bound on rounding noise in a sum of leave deltas. Sums that
// cancel analytically come out near +-1e-17; without the snap a large gamma
// turns that noise into +-inf.
constexpr double kZeroSumPerMember = 1e-12;

// gamma * mean, keeping gamma = +inf well defined: inf * 0 is taken as 0.
double scale(double gamma, double sum, std::uint32_t size) {
  if (std::abs(sum) <= kZeroSumPerMember * size) return 0.0;
  const double mean = sum / static_cast<double>(size);
  if (std::isinf(gamma)) {
    if (mean == 0.0) return 0.0;
    return mean > 0.0 ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
  }
  return gamma * mean;
}

}  // namespace

double overlap_threshold(const Graph& graph, const PartitionState& state, CommunityId community,
                         double gamma, LogBase base) {
  if (community >= state.stats.size() || state.stats[community].size == 0) {
    throw ValidationError("overlap_threshold: unknown or empty community");
  }
  const CommunityStats& stats = state.stats[community];
  double sum = 0.0;
  for (NodeId x = 0; x < graph.node_count(); ++x) {
    if (state.assignment[x] != community) continue;
    sum -= delta_leave(graph.total_volume(), stats, NodeProfile::of(graph, x),
                       links_to(graph, state, x, community), base);
  }
  return scale(gamma, sum, stats.size);
}

std::vector<double> overlap_thresholds(const Graph& graph, const PartitionState& state,
                                       double gamma, LogBase base) {
  std::vector<double> sum(state.stats.size(), 0.0);
  for (NodeId x = 0; x < graph.node_count(); ++x) {
    const CommunityId c = state.assignment[x];
    if (state.stats[c].size <= 1) continue;
    sum[c] -= delta_leave(graph.total_volume(), state.stats[c], NodeProfile::of(graph, x),
                          links_to(graph, state, x, c), base);
  }
  std::vector<double> tau(state.stats.size(), 0.0);
  for (std::size_t c = 0; c < tau.size(); ++c) {
    if (state.stats[c].size > 0) tau[c] = scale(gamma, sum[c], state.stats[c].size);
  }
  return tau;
}

std::vector<Replication> find_replications(const Graph& graph, const PartitionState& state,
                                           double gamma, unsigned workers, LogBase base) {
  const std::vector<double> tau = overlap_thresholds(graph, state, gamma, base);
  const double vol = graph.total_volume();
  const NodeId n = graph.node_count();
  workers = std::max(1u, workers);

  std::vector<std::vector<Replication>> found(workers);
  std::atomic<NodeId> cursor{0};
  constexpr NodeId kChunk = 256;

  auto work = [&](unsigned id) {
    LinkAccumulator scratch(n);
    auto& out = found[id];
    for (;;) {
      const NodeId begin = cursor.fetch_add(kChunk, std::memory_order_relaxed);
      if (begin >= n) break;
      const NodeId end = std::min<NodeId>(n, begin + kChunk);
      for (NodeId x = begin; x < end; ++x) {
        if (graph.isolated(x)) continue;
        const CommunityId own = state.assignment[x];
        scratch.gather(graph, x, [&](NodeId y) { return state.assignment[y]; });
        const NodeProfile node = NodeProfile::of(graph, x);
        for (CommunityId c : scratch.communities()) {
          if (c == own) continue;
          const double gain = delta_overlap(vol, state.stats[c], scratch.links(c), node, base);
          if (gain > tau[c]) out.push_back({x, c, gain, tau[c]});
        }
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  std::vector<Replication> all;
  for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end(), [](const Replication& a, const Replication& b) {
    return a.node != b.node ? a.node < b.node : a.community < b.community;
  });
  return all;
}

Cover detect_overlapping(const Graph& graph, const PartitionState& state,
                         const DetectorConfig& config) {
  config.validate();
  Cover cover = state.to_cover();
  // to_cover lists live communities in ascending id order.
  std::vector<std::size_t> index(state.stats.size(), 0);
  {
    std::size_t next = 0;
    for (std::size_t c = 0; c < state.stats.size(); ++c) {
      if (state.stats[c].size > 0) index[c] = next++;
    }
  }
  for (const Replication& r :
       find_replications(graph, state, config.gamma, config.workers, config.log_base)) {
    cover.insert(index[r.community], r.node);
  }
  return cover;
}

}  // namespace segame
