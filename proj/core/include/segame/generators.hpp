#pragma once

#include <cstdint>

#include "segame/cover.hpp"
#include "segame/graph.hpp"

namespace segame {

struct PlantedGraph {
  Graph graph;
  Cover blocks;  ///< ground-truth blocks, block b = [b*size, (b+1)*size)
};

/// Dense planted partition: every pair inside a block is linked with
/// probability p_in, every other pair with p_out. O(n^2); for small graphs.
PlantedGraph planted_partition(NodeId blocks, NodeId block_size, double p_in, double p_out,
                               std::uint64_t seed);

/// Sparse planted partition with a target average degree and a fraction
/// `mixing` of each node's expected degree pointing outside its block.
/// Samples round(n * avg_degree / 2) distinct unweighted edges; O(m).
PlantedGraph sparse_planted_partition(NodeId node_count, NodeId block_size, double avg_degree,
                                      double mixing, std::uint64_t seed);

}  // namespace segame
