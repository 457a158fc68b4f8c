#pragma once

#include <numeric>
#include <vector>

#include "reference.hpp"
#include "segame/game.hpp"

namespace segame::testing {

// Two triangles {0,1,2} and {3,4,5}, optionally bridged by 2-3.
inline RawGraph two_triangles(bool bridged = false) {
  RawGraph g{6, false, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}};
  if (bridged) g.edges.push_back({2, 3});
  return g;
}

// 4-cliques {0..3} and {4..7} joined by the edge 3-4.
inline RawGraph barbell() {
  RawGraph g{8, false, {}};
  for (NodeId base : {0u, 4u}) {
    for (NodeId u = base; u < base + 4; ++u) {
      for (NodeId v = u + 1; v < base + 4; ++v) g.edges.push_back({u, v});
    }
  }
  g.edges.push_back({3, 4});
  return g;
}

// Triangle {0,1,2} with node 3 attached to 0 and 1, plus a tail 3-4-5-2.
inline RawGraph absorb_example() {
  return {6, false, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {3, 4}, {4, 5}, {2, 5}}};
}

inline PartitionState make_state(const Graph& graph, std::vector<CommunityId> labels) {
  PartitionState s;
  s.stats = recompute_stats(graph, labels);
  s.assignment = std::move(labels);
  s.live_communities = 0;
  for (const auto& st : s.stats) s.live_communities += st.size > 0 ? 1 : 0;
  return s;
}

}  // namespace segame::testing
