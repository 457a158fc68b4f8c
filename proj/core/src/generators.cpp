#include "segame/generators.hpp"

#include <cmath>
#include <random>
#include <unordered_set>
#include <vector>

namespace segame {

namespace {

Cover block_cover(NodeId n, NodeId block_size) {
  Cover blocks;
  for (NodeId start = 0; start < n; start += block_size) {
    Cover::Community members;
    for (NodeId x = start; x < std::min(n, start + block_size); ++x) members.push_back(x);
    blocks.add(std::move(members));
  }
  return blocks;
}

}  // namespace

PlantedGraph planted_partition(NodeId blocks, NodeId block_size, double p_in, double p_out,
                               std::uint64_t seed) {
  if (block_size == 0) throw ValidationError("block size must be positive");
  const NodeId n = blocks * block_size;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double p = u / block_size == v / block_size ? p_in : p_out;
      if (coin(rng) < p) edges.push_back({u, v, 1.0});
    }
  }
  return {Graph::from_edges(n, edges, false), block_cover(n, block_size)};
}

PlantedGraph sparse_planted_partition(NodeId node_count, NodeId block_size, double avg_degree,
                                      double mixing, std::uint64_t seed) {
  if (block_size < 2 || block_size >= node_count) {
    throw ValidationError("block size must be in [2, node_count)");
  }
  if (!(mixing >= 0.0 && mixing <= 1.0)) throw ValidationError("mixing must be in [0, 1]");
  const auto target = static_cast<std::size_t>(std::llround(node_count * avg_degree / 2.0));
  const auto external = static_cast<std::size_t>(std::llround(target * mixing));
  const std::size_t internal = target - external;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> any(0, node_count - 1);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(target * 2);
  std::vector<Edge> edges;
  edges.reserve(target);

  auto try_add = [&](NodeId u, NodeId v) {
    if (u == v) return false;
    const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    if (!seen.insert(key).second) return false;
    edges.push_back({u, v, 1.0});
    return true;
  };

  for (std::size_t made = 0; made < internal;) {
    const NodeId u = any(rng);
    const NodeId start = u / block_size * block_size;
    const NodeId stop = std::min(node_count, start + block_size);
    if (stop - start < 2) continue;
    std::uniform_int_distribution<NodeId> same(start, stop - 1);
    if (try_add(u, same(rng))) ++made;
  }
  for (std::size_t made = 0; made < external;) {
    const NodeId u = any(rng);
    const NodeId v = any(rng);
    if (u / block_size == v / block_size) continue;
    if (try_add(u, v)) ++made;
  }
  return {Graph::from_edges(node_count, edges, false), block_cover(node_count, block_size)};
}

}  // namespace segame
