#pragma once

#include <span>

#include "segame/cover.hpp"

namespace segame {

/// Harmonic mean of precision |a∩b|/|a| and recall |a∩b|/|b|. Inputs must be
/// sorted; throws DomainError if either is empty.
double pair_f1(std::span<const NodeId> a, std::span<const NodeId> b);

/// Mean best-match F1 in both directions, averaged. Symmetric.
double avg_f1(const Cover& detected, const Cover& truth);

/// Mutual information of two disjoint partitions of the same node set,
/// normalized by the larger of the two entropies. Throws ValidationError when
/// either input overlaps or the node sets differ.
double nmi(const Cover& a, const Cover& b);

/// Overlapping NMI in the lack-of-information form with max normalization.
/// Nodes in [0, universe) that a cover leaves out count as non-members of all
/// its communities. Throws DomainError on an empty cover and ValidationError
/// when a member id is outside the universe.
double onmi(const Cover& a, const Cover& b, NodeId universe);
/// Universe = largest member id in either cover + 1.
double onmi(const Cover& a, const Cover& b);

}  // namespace segame
