#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "segame/graph.hpp"
#include "segame/types.hpp"

namespace segame {

/// A collection of communities in which a node may appear any number of
/// times. Members are kept sorted and unique; empty communities are rejected.
class Cover {
 public:
  using Community = std::vector<NodeId>;

  Cover() = default;
  explicit Cover(std::vector<Community> communities);

  /// One community per distinct assignment value, ordered by ascending
  /// community id. Entries equal to kNoCommunity are skipped.
  static Cover from_assignment(std::span<const CommunityId> assignment);

  /// Adds a community; members are sorted and deduplicated. Returns its index.
  std::size_t add(Community members);
  /// Adds `node` to community `index` if it is not already a member.
  bool insert(std::size_t index, NodeId node);

  std::size_t size() const noexcept { return communities_.size(); }
  bool empty() const noexcept { return communities_.empty(); }
  const Community& operator[](std::size_t i) const { return communities_[i]; }
  auto begin() const noexcept { return communities_.begin(); }
  auto end() const noexcept { return communities_.end(); }
  const std::vector<Community>& communities() const noexcept { return communities_; }

  /// Largest member id + 1, or 0 for an empty cover.
  NodeId span_size() const noexcept;
  /// For each node in [0, node_count), the indices of communities containing it.
  std::vector<std::vector<std::size_t>> memberships(NodeId node_count) const;
  /// True when no node appears in two communities.
  bool disjoint() const;
  /// Total number of (node, community) memberships.
  std::size_t membership_count() const noexcept;

  /// Same communities irrespective of community order.
  bool same_communities(const Cover& other) const;

  friend bool operator==(const Cover&, const Cover&) = default;

 private:
  std::vector<Community> communities_;
};

struct CoverLoad {
  Cover cover;
  std::size_t dropped_labels = 0;  ///< labels absent from the id map
  std::size_t skipped_lines = 0;   ///< non-empty lines with no mappable label
};

/// Reads one community per line (whitespace/tab separated labels). Labels not
/// present in `ids` are dropped and counted.
CoverLoad load_cover(std::istream& in, const IdMap& ids);

/// Same format, but unknown labels are added to `ids` instead of dropped.
Cover load_cover_extending(std::istream& in, IdMap& ids);

/// One community per line in cover order, members in ascending dense id,
/// printed with their original labels.
void write_cover(const Cover& cover, const IdMap& ids, std::ostream& out);

}  // namespace segame
