#pragma once

#include <cstdint>

#include "segame/cover.hpp"
#include "segame/graph.hpp"

namespace segame {

enum class LogBase : std::uint8_t { bits, nats };

/// Cached aggregate of one community.
///
/// volume: sum of member degrees (directed: in-strengths).
/// cut: weight of edges crossing the boundary. Undirected graphs count every
/// crossing edge; directed graphs count edges entering the community from
/// outside, which keeps cut <= volume and makes a singleton's cut equal to
/// its own degree minus its self-loop.
struct CommunityStats {
  double volume = 0.0;
  double cut = 0.0;
  std::uint32_t size = 0;

  friend bool operator==(const CommunityStats&, const CommunityStats&) = default;
};

/// Edge weight between a node and the members of one community, self-loop
/// excluded. `in` flows from members into the node, `out` from the node to
/// members. Undirected graphs set both to the same value.
struct NodeLinks {
  double in = 0.0;
  double out = 0.0;

  static constexpr NodeLinks undirected(double weight) noexcept { return {weight, weight}; }
};

/// What the delta kernels need to know about the moving node.
struct NodeProfile {
  double degree = 0.0;     ///< d_x
  double self_loop = 0.0;  ///< weight of the x-x edge, 0 if none

  static NodeProfile of(const Graph& graph, NodeId x) noexcept {
    return {graph.degree(x), graph.self_loop(x)};
  }
};

/// 2D structural entropy of `cover`, summed community by community. Each
/// community's volume and cut are recomputed from scratch, so the function
/// also evaluates covers with overlapping membership. Zero-degree members
/// contribute nothing; a community with zero volume but a positive cut throws
/// DomainError.
double entropy_2d(const Graph& graph, const Cover& cover, LogBase base = LogBase::bits);

/// -sum over nodes with d_x > 0 of (d_x/v) log(d_x/v). 0 for an empty graph.
double node_entropy_baseline(const Graph& graph, LogBase base = LogBase::bits);

/// Statistics of C \ {x}: volume - d_x and cut + in + out - d_x + loop.
CommunityStats leave_stats(const CommunityStats& stats, NodeProfile node, NodeLinks links) noexcept;
/// Undirected shorthand: links.in == links.out == internal.
CommunityStats leave_stats(const CommunityStats& stats, double degree, double internal) noexcept;
/// Directed form with separate orientations.
CommunityStats leave_stats(const CommunityStats& stats, double degree, double internal_in,
                           double internal_out) noexcept;

/// Statistics of C u {x}; exact inverse of leave_stats.
CommunityStats join_stats(const CommunityStats& stats, NodeProfile node, NodeLinks links) noexcept;

/// Entropy change H(P) - H(P') when x leaves the community described by
/// `stats` (x included) and becomes a singleton. Exactly 0 for a singleton.
///
/// Evaluated in O(1) from cached volume and cut:
///   [g' log(v'/V) - g log(v/V) + d log(v/V) + v' log(v/v') - loop log(d/V)] / V
/// The last term vanishes without self-loops.
double delta_leave(double total_volume, const CommunityStats& stats, NodeProfile node,
                   NodeLinks links, LogBase base = LogBase::bits) noexcept;

/// Entropy change of moving x from `src` (x included) to `dst` (x excluded):
/// delta_leave(src) - delta_leave(dst u {x}). Pass same_community = true when
/// src and dst are the same community; the result is then 0.
double delta_transfer(double total_volume, const CommunityStats& src, NodeLinks src_links,
                      const CommunityStats& dst, NodeLinks dst_links, NodeProfile node,
                      LogBase base = LogBase::bits, bool same_community = false) noexcept;

/// Gain of copying x into `dst` (x excluded): -delta_leave(dst u {x}).
double delta_overlap(double total_volume, const CommunityStats& dst, NodeLinks dst_links,
                     NodeProfile node, LogBase base = LogBase::bits) noexcept;

}  // namespace segame
