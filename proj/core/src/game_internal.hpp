#pragma once

#include "segame/entropy.hpp"
#include "segame/game.hpp"

namespace segame::detail {

/// Best response of x given links already gathered into `scratch`.
/// `stats_of` returns a community's statistics by value, so callers decide how
/// shared state is read.
template <typename StatsOf>
Strategy evaluate_strategy(const Graph& graph, NodeId x, CommunityId own, StrategyRule rule,
                           LogBase base, const LinkAccumulator& scratch, StatsOf&& stats_of) {
  const NodeProfile node = NodeProfile::of(graph, x);
  const double vol = graph.total_volume();
  const double leave = delta_leave(vol, stats_of(own), node, scratch.links(own), base);

  Strategy best;
  best.delta = rule == StrategyRule::leave_baseline ? leave : 0.0;
  for (CommunityId c : scratch.communities()) {
    if (c == own) continue;
    const CommunityStats dst = stats_of(c);
    if (dst.size == 0) continue;
    const NodeLinks links = scratch.links(c);
    const double transfer =
        leave - delta_leave(vol, join_stats(dst, node, links), node, links, base);
    if (transfer > best.delta || (best.target && transfer == best.delta && c < *best.target)) {
      best.delta = transfer;
      best.target = c;
    }
  }
  return best;
}

}  // namespace segame::detail
