#pragma once

#include <vector>

#include "segame/cover.hpp"
#include "segame/game.hpp"
#include "segame/graph.hpp"

namespace segame {

/// tau_o(C) = gamma / |C| * sum over members of -Delta_L(x_i, C).
/// Throws ValidationError for an unknown or empty community.
double overlap_threshold(const Graph& graph, const PartitionState& state, CommunityId community,
                         double gamma, LogBase base = LogBase::bits);

/// Thresholds for every community id in one O(m) pass; entries of retired
/// communities are 0.
std::vector<double> overlap_thresholds(const Graph& graph, const PartitionState& state,
                                       double gamma, LogBase base = LogBase::bits);

struct Replication {
  NodeId node = 0;
  CommunityId community = 0;
  double gain = 0.0;       ///< Delta_O
  double threshold = 0.0;  ///< tau_o of the community
};

/// Every (node, adjacent foreign community) pair whose overlap gain exceeds the
/// community threshold, sorted by (node, community). All values use the frozen
/// partition statistics.
std::vector<Replication> find_replications(const Graph& graph, const PartitionState& state,
                                           double gamma, unsigned workers = 1,
                                           LogBase base = LogBase::bits);

/// The partition's cover (ascending community id) extended by every
/// replication from find_replications.
Cover detect_overlapping(const Graph& graph, const PartitionState& state,
                         const DetectorConfig& config);

}  // namespace segame
