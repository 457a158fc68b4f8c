#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "segame/types.hpp"

namespace segame {

struct Edge {
  NodeId source = 0;
  NodeId target = 0;
  double weight = 1.0;
};

struct Adjacent {
  NodeId node = 0;
  double weight = 0.0;
};

/// Immutable weighted graph in CSR form.
///
/// Undirected graphs store every edge in both endpoint lists, except self-loops,
/// which appear once. Directed graphs keep separate out- and in-adjacency.
/// Parallel edges are merged by summing their weights.
///
/// degree(x) is the node's volume contribution: the strength for undirected
/// graphs and the in-strength for directed graphs. A self-loop contributes its
/// weight once.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on nodes [0, node_count). Throws ValidationError on
  /// out-of-range endpoints or non-positive / non-finite weights.
  static Graph from_edges(NodeId node_count, std::span<const Edge> edges, bool directed);

  NodeId node_count() const noexcept { return node_count_; }
  bool directed() const noexcept { return directed_; }

  /// Number of distinct edges after merging (self-loops included).
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Undirected: all neighbors. Directed: targets of edges leaving the node.
  std::span<const Adjacent> out_neighbors(NodeId x) const noexcept {
    return {out_adj_.data() + out_offsets_[x], out_adj_.data() + out_offsets_[x + 1]};
  }
  /// Undirected: same as out_neighbors. Directed: sources of edges entering the node.
  std::span<const Adjacent> in_neighbors(NodeId x) const noexcept {
    if (!directed_) return out_neighbors(x);
    return {in_adj_.data() + in_offsets_[x], in_adj_.data() + in_offsets_[x + 1]};
  }

  double degree(NodeId x) const noexcept { return directed_ ? in_degree_[x] : out_degree_[x]; }
  double out_degree(NodeId x) const noexcept { return out_degree_[x]; }
  double in_degree(NodeId x) const noexcept { return directed_ ? in_degree_[x] : out_degree_[x]; }
  double self_loop(NodeId x) const noexcept { return self_loop_[x]; }

  /// True when the node has no incident edge in either direction.
  bool isolated(NodeId x) const noexcept {
    return out_offsets_[x] == out_offsets_[x + 1] &&
           (!directed_ || in_offsets_[x] == in_offsets_[x + 1]);
  }

  /// v_lambda: sum of degree(x) over all nodes.
  double total_volume() const noexcept { return total_volume_; }
  /// Sum of merged edge weights, each edge counted once.
  double total_weight() const noexcept { return total_weight_; }

 private:
  NodeId node_count_ = 0;
  bool directed_ = false;
  std::size_t edge_count_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Adjacent> out_adj_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Adjacent> in_adj_;
  std::vector<double> out_degree_;
  std::vector<double> in_degree_;
  std::vector<double> self_loop_;
  double total_volume_ = 0.0;
  double total_weight_ = 0.0;
};

/// Bidirectional mapping between original node labels and dense ids.
/// Dense ids are assigned in order of first appearance.
class IdMap {
 public:
  /// Returns the id for `label`, assigning the next dense id if it is new.
  NodeId intern(std::string_view label);
  std::optional<NodeId> find(std::string_view label) const;
  const std::string& label(NodeId id) const { return labels_.at(id); }
  NodeId size() const noexcept { return static_cast<NodeId>(labels_.size()); }

  /// Identity mapping "0".."n-1".
  static IdMap identity(NodeId n);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
};

struct LoadedGraph {
  Graph graph;
  IdMap ids;
};

/// Reads a whitespace-separated edge list ("u v" or "u v w"); '#' starts a
/// comment line. Labels are arbitrary tokens and are remapped to dense ids.
LoadedGraph parse_edge_list(std::istream& in, bool directed, bool weighted);

}  // namespace segame
