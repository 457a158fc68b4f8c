#include "segame/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <string>

namespace segame {

namespace {

// Sorts (row, column) pairs and merges duplicates by summing weights, then
// lays the rows out in CSR order.
void build_csr(NodeId n, std::vector<Edge>& entries, std::vector<std::size_t>& offsets,
               std::vector<Adjacent>& adj) {
  std::sort(entries.begin(), entries.end(), [](const Edge& a, const Edge& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  adj.clear();
  adj.reserve(entries.size());
  std::size_t i = 0;
  while (i < entries.size()) {
    const NodeId u = entries[i].source;
    const NodeId v = entries[i].target;
    double w = 0.0;
    for (; i < entries.size() && entries[i].source == u && entries[i].target == v; ++i) {
      w += entries[i].weight;
    }
    adj.push_back({v, w});
    ++offsets[u + 1];
  }
  for (std::size_t k = 1; k < offsets.size(); ++k) offsets[k] += offsets[k - 1];
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::string_view trim_left(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i);
}

}  // namespace

Graph Graph::from_edges(NodeId node_count, std::span<const Edge> edges, bool directed) {
  Graph g;
  g.node_count_ = node_count;
  g.directed_ = directed;

  std::vector<Edge> out_entries;
  std::vector<Edge> in_entries;
  out_entries.reserve(directed ? edges.size() : 2 * edges.size());
  if (directed) in_entries.reserve(edges.size());

  for (const Edge& e : edges) {
    if (e.source >= node_count || e.target >= node_count) {
      throw ValidationError("edge endpoint out of range: " + std::to_string(e.source) + " -> " +
                            std::to_string(e.target));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw ValidationError("edge weight must be positive and finite");
    }
    if (directed) {
      out_entries.push_back(e);
      in_entries.push_back({e.target, e.source, e.weight});
    } else {
      // Canonical orientation so that "u v" and "v u" merge.
      const NodeId lo = std::min(e.source, e.target);
      const NodeId hi = std::max(e.source, e.target);
      out_entries.push_back({lo, hi, e.weight});
    }
  }

  if (directed) {
    build_csr(node_count, out_entries, g.out_offsets_, g.out_adj_);
    build_csr(node_count, in_entries, g.in_offsets_, g.in_adj_);
    g.edge_count_ = g.out_adj_.size();
  } else {
    // Merge canonical edges first, then mirror the non-loop ones.
    std::vector<std::size_t> offsets;
    std::vector<Adjacent> merged;
    build_csr(node_count, out_entries, offsets, merged);
    g.edge_count_ = merged.size();
    std::vector<Edge> symmetric;
    symmetric.reserve(2 * merged.size());
    for (NodeId u = 0; u < node_count; ++u) {
      for (std::size_t k = offsets[u]; k < offsets[u + 1]; ++k) {
        symmetric.push_back({u, merged[k].node, merged[k].weight});
        if (merged[k].node != u) symmetric.push_back({merged[k].node, u, merged[k].weight});
      }
    }
    build_csr(node_count, symmetric, g.out_offsets_, g.out_adj_);
    g.in_offsets_ = {0};
  }

  g.out_degree_.assign(node_count, 0.0);
  g.self_loop_.assign(node_count, 0.0);
  if (directed) g.in_degree_.assign(node_count, 0.0);

  for (NodeId u = 0; u < node_count; ++u) {
    for (const Adjacent& a : g.out_neighbors(u)) {
      g.out_degree_[u] += a.weight;
      if (a.node == u) g.self_loop_[u] = a.weight;
      if (directed) g.in_degree_[a.node] += a.weight;
      if (directed || a.node >= u) g.total_weight_ += a.weight;
    }
  }
  for (NodeId u = 0; u < node_count; ++u) g.total_volume_ += g.degree(u);
  return g;
}

NodeId IdMap::intern(std::string_view label) {
  auto [it, inserted] = ids_.try_emplace(std::string(label), static_cast<NodeId>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

std::optional<NodeId> IdMap::find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

IdMap IdMap::identity(NodeId n) {
  IdMap m;
  for (NodeId i = 0; i < n; ++i) m.intern(std::to_string(i));
  return m;
}

LoadedGraph parse_edge_list(std::istream& in, bool directed, bool weighted) {
  LoadedGraph out;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim_left(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_fields(body);
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(line_no, "expected \"u v\" or \"u v w\", got " +
                                    std::to_string(fields.size()) + " fields");
    }
    double w = 1.0;
    if (fields.size() == 3) {
      if (!weighted) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": weight column present but the graph is unweighted");
      }
      const std::string_view tok = fields[2];
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(w)) {
        throw ParseError(line_no, "invalid weight '" + std::string(tok) + "'");
      }
      if (w < 0.0) {
        throw ValidationError("line " + std::to_string(line_no) + ": negative weight");
      }
    }
    const NodeId u = out.ids.intern(fields[0]);
    const NodeId v = out.ids.intern(fields[1]);
    // Zero-weight lines still declare their endpoints but add no edge.
    if (w > 0.0) edges.push_back({u, v, w});
  }
  if (in.bad()) throw std::ios_base::failure("read error while parsing edge list");
  out.graph = Graph::from_edges(out.ids.size(), edges, directed);
  return out;
}

}  // namespace segame
