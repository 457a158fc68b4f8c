#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "segame/cover.hpp"
#include "segame/entropy.hpp"
#include "segame/graph.hpp"

namespace segame {

/// How a node decides between staying and transferring.
enum class StrategyRule : std::uint8_t {
  /// The best transfer must beat the node's own leave gain Delta_L(x, C_x).
  /// Exposed on the command line as "algorithm1".
  leave_baseline,
  /// The best transfer must beat staying, i.e. be strictly positive.
  /// Exposed on the command line as "eq7".
  stay_baseline,
};

struct DetectorConfig {
  double tau_n = 0.3;               ///< termination threshold, in (0, 1)
  double gamma = 1.0;               ///< overlap factor, >= 0
  int max_iterations = 100;         ///< hard cap on sweeps
  unsigned workers = 1;             ///< >= 1; more than one selects the locked parallel sweep
  StrategyRule rule = StrategyRule::leave_baseline;
  std::optional<std::uint64_t> ordering_seed;  ///< shuffle the sweep order when set
  LogBase log_base = LogBase::bits;

  /// Throws ValidationError when a field is out of range.
  void validate() const;
};

struct SweepRecord {
  std::size_t moved = 0;    ///< M
  double delta_sum = 0.0;   ///< sum of the winning deltas of moved nodes
  double seconds = 0.0;
};

/// Node-to-community assignment plus cached per-community statistics.
///
/// Community ids are the node ids of the initial singletons, so `stats` is
/// indexed by id over [0, node_count). Retired communities have size 0.
struct PartitionState {
  std::vector<CommunityId> assignment;
  std::vector<CommunityStats> stats;
  std::size_t live_communities = 0;
  std::vector<SweepRecord> sweeps;

  std::size_t iterations() const noexcept { return sweeps.size(); }
  /// Live communities in ascending id order.
  Cover to_cover() const;
};

/// Every node in its own community. Undirected: (v, g) = (d_x, d_x - loop);
/// directed: v = in-strength, g = in-strength - loop. Isolated nodes keep a
/// frozen singleton with zero stats.
PartitionState init_singletons(const Graph& graph);

/// From-scratch volume, cut and size for every community id in [0, n).
std::vector<CommunityStats> recompute_stats(const Graph& graph,
                                            std::span<const CommunityId> assignment);

/// Largest absolute difference between cached and recomputed stats, with the
/// size field compared exactly (any size mismatch returns +infinity).
double stats_deviation(const Graph& graph, const PartitionState& state);

/// Scratch space that accumulates a node's link weights per neighboring
/// community in O(deg). One instance per thread.
class LinkAccumulator {
 public:
  explicit LinkAccumulator(NodeId node_count = 0);

  /// Collects links of `x` to the communities of its neighbors.
  /// `community_of` maps a neighbor id to its current community.
  template <typename CommunityOf>
  void gather(const Graph& graph, NodeId x, CommunityOf&& community_of) {
    clear();
    for (const Adjacent& a : graph.out_neighbors(x)) {
      if (a.node == x) continue;
      add(community_of(a.node), 0.0, a.weight);
    }
    if (graph.directed()) {
      for (const Adjacent& a : graph.in_neighbors(x)) {
        if (a.node == x) continue;
        add(community_of(a.node), a.weight, 0.0);
      }
    } else {
      for (CommunityId c : touched_) links_[c].in = links_[c].out;
    }
  }

  /// Communities touched by the last gather, in first-touch order.
  std::span<const CommunityId> communities() const noexcept { return touched_; }
  NodeLinks links(CommunityId c) const noexcept { return seen_[c] ? links_[c] : NodeLinks{}; }

 private:
  void clear() noexcept;
  void add(CommunityId c, double in, double out);

  std::vector<NodeLinks> links_;
  std::vector<char> seen_;
  std::vector<CommunityId> touched_;
};

/// Outcome of a node's best response.
struct Strategy {
  std::optional<CommunityId> target;  ///< empty means stay
  double delta = 0.0;                 ///< winning heuristic value Delta_max

  bool stays() const noexcept { return !target.has_value(); }
};

/// Best response of `x` against the current state. Candidates are the
/// communities holding at least one neighbor; ties go to the lowest id.
Strategy best_strategy(const Graph& graph, const PartitionState& state, NodeId x,
                       StrategyRule rule, LinkAccumulator& scratch,
                       LogBase base = LogBase::bits);
Strategy best_strategy(const Graph& graph, const PartitionState& state, NodeId x,
                       StrategyRule rule, LogBase base = LogBase::bits);

/// Moves x from src to dst and updates both communities' statistics. Throws
/// std::logic_error if x is not in src or src == dst.
void apply_transfer(const Graph& graph, PartitionState& state, NodeId x, CommunityId src,
                    CommunityId dst, NodeLinks src_links, NodeLinks dst_links);

/// Stop when nothing moved, or when the mean gain per moved node drops to
/// tau_n / node_count times the node-entropy baseline.
bool check_termination(std::size_t moved, double delta_sum, double baseline, double tau_n,
                       std::size_t node_count) noexcept;

/// Optional observers used by tests and diagnostics. on_transfer runs after a
/// move is committed; in parallel mode it runs inside the critical section of
/// the worker that made the move.
struct DetectionHooks {
  std::function<void(const PartitionState&, NodeId, CommunityId src, CommunityId dst,
                     double delta)>
      on_transfer;
  std::function<void(const PartitionState&, const SweepRecord&)> on_sweep;
};

/// Repeated best-response sweeps from the singleton partition until
/// check_termination or max_iterations.
PartitionState detect_nonoverlapping(const Graph& graph, const DetectorConfig& config,
                                     const DetectionHooks& hooks = {});

namespace detail {
/// One sweep of the locked multi-worker variant. Returns the sweep record.
SweepRecord parallel_sweep(const Graph& graph, PartitionState& state,
                           std::span<const NodeId> order, const DetectorConfig& config,
                           const DetectionHooks& hooks);
}  // namespace detail

}  // namespace segame
