#include "segame/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <vector>

namespace segame {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double f1_from_counts(std::size_t common, std::size_t a, std::size_t b) {
  // 2PR / (P + R) with P = k/a, R = k/b simplifies to 2k / (a + b).
  return 2.0 * static_cast<double>(common) / static_cast<double>(a + b);
}

// Mean over communities of `from` of the best F1 against any community of `to`.
double best_match_mean(const Cover& from, const Cover& to, NodeId universe) {
  const auto owners = to.memberships(universe);
  std::vector<std::size_t> counts(to.size(), 0);
  std::vector<std::size_t> touched;
  double total = 0.0;
  for (const auto& community : from) {
    for (NodeId x : community) {
      for (std::size_t j : owners[x]) {
        if (counts[j]++ == 0) touched.push_back(j);
      }
    }
    double best = 0.0;
    for (std::size_t j : touched) {
      best = std::max(best, f1_from_counts(counts[j], community.size(), to[j].size()));
      counts[j] = 0;
    }
    touched.clear();
    total += best;
  }
  return total / static_cast<double>(from.size());
}

// Pair (i, j) -> |A_i ∩ B_j| for every intersecting pair.
std::unordered_map<std::uint64_t, std::size_t> intersections(const Cover& a, const Cover& b,
                                                             NodeId universe) {
  const auto in_b = b.memberships(universe);
  std::unordered_map<std::uint64_t, std::size_t> counts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (NodeId x : a[i]) {
      for (std::size_t j : in_b[x]) ++counts[(static_cast<std::uint64_t>(i) << 32) | j];
    }
  }
  return counts;
}

// -w log2(w / n), 0 for w = 0.
double h(double w, double n) { return w == 0.0 ? 0.0 : -w * (std::log2(w) - std::log2(n)); }

double binary_entropy(std::size_t size, std::size_t n) {
  return h(static_cast<double>(size), static_cast<double>(n)) +
         h(static_cast<double>(n - size), static_cast<double>(n));
}

// Conditional entropy H(X_i | Y_j) from the 2x2 membership table
// a = in neither, b = only Y_j, c = only X_i, d = both. When the table is
// negatively correlated the pair carries no information and H(X_i) is used.
double conditional_pair_entropy(double a, double b, double c, double d, double n) {
  if (h(a, n) + h(d, n) >= h(b, n) + h(c, n)) {
    const double v = (h(a, n) - h(a + c, n)) + (h(d, n) - h(b + d, n)) + h(b, n) + h(c, n);
    return std::max(0.0, v);
  }
  return h(c + d, n) + h(a + b, n);
}

double conditional_cover_entropy(const Cover& x, const Cover& y,
                                 const std::unordered_map<std::uint64_t, std::size_t>& inter,
                                 bool swapped, NodeId universe) {
  const double n = universe;
  std::vector<double> best(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) best[i] = binary_entropy(x[i].size(), universe);
  for (const auto& [key, count] : inter) {
    std::size_t i = key >> 32;
    std::size_t j = key & 0xffffffffu;
    if (swapped) std::swap(i, j);
    const double d = static_cast<double>(count);
    const double c = static_cast<double>(x[i].size()) - d;
    const double b = static_cast<double>(y[j].size()) - d;
    const double a = n - d - c - b;
    best[i] = std::min(best[i], conditional_pair_entropy(a, b, c, d, n));
  }
  double total = 0.0;
  for (double v : best) total += v;
  return total;
}

double partition_entropy(const Cover& p, double n) {
  double e = 0.0;
  for (const auto& c : p) {
    const double s = static_cast<double>(c.size());
    e += s / n * std::log2(n / s);
  }
  return e;
}

}  // namespace

double pair_f1(std::span<const NodeId> a, std::span<const NodeId> b) {
  if (a.empty() || b.empty()) throw DomainError("pair_f1 is undefined for an empty set");
  std::size_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return f1_from_counts(common, a.size(), b.size());
}

double avg_f1(const Cover& detected, const Cover& truth) {
  if (detected.empty() || truth.empty()) throw DomainError("avg_f1 needs two non-empty covers");
  const NodeId universe = std::max(detected.span_size(), truth.span_size());
  return clamp01(0.5 * (best_match_mean(detected, truth, universe) +
                        best_match_mean(truth, detected, universe)));
}

double nmi(const Cover& a, const Cover& b) {
  if (!a.disjoint() || !b.disjoint()) {
    throw ValidationError("nmi requires disjoint partitions; use onmi for overlapping covers");
  }
  const NodeId span = std::max(a.span_size(), b.span_size());
  std::vector<char> in_a(span, 0);
  std::vector<char> in_b(span, 0);
  for (const auto& c : a) {
    for (NodeId x : c) in_a[x] = 1;
  }
  for (const auto& c : b) {
    for (NodeId x : c) in_b[x] = 1;
  }
  if (in_a != in_b) throw ValidationError("nmi requires partitions of the same node set");
  const std::size_t count = a.membership_count();
  if (count == 0) throw DomainError("nmi needs non-empty partitions");
  const double n = static_cast<double>(count);

  const double ha = partition_entropy(a, n);
  const double hb = partition_entropy(b, n);
  const double norm = std::max(ha, hb);
  if (norm == 0.0) return 1.0;  // both are the single all-node community

  // Ordered pairs so that identical partitions sum exactly like the entropy.
  const auto inter = intersections(a, b, span);
  std::vector<std::pair<std::uint64_t, std::size_t>> pairs(inter.begin(), inter.end());
  std::sort(pairs.begin(), pairs.end());
  double mi = 0.0;
  for (const auto& [key, k] : pairs) {
    const double sa = static_cast<double>(a[key >> 32].size());
    const double sb = static_cast<double>(b[key & 0xffffffffu].size());
    const double kk = static_cast<double>(k);
    mi += kk / n * std::log2(n * kk / (sa * sb));
  }
  return clamp01(mi / norm);
}

double onmi(const Cover& a, const Cover& b, NodeId universe) {
  if (a.empty() || b.empty()) throw DomainError("onmi needs two non-empty covers");
  if (a.span_size() > universe || b.span_size() > universe) {
    throw ValidationError("onmi: community member outside the universe");
  }
  double ha = 0.0;
  for (const auto& c : a) ha += binary_entropy(c.size(), universe);
  double hb = 0.0;
  for (const auto& c : b) hb += binary_entropy(c.size(), universe);
  const double norm = std::max(ha, hb);
  if (norm == 0.0) return 1.0;  // every community spans the whole universe

  const auto inter = intersections(a, b, universe);
  const double ha_given_b = conditional_cover_entropy(a, b, inter, false, universe);
  const double hb_given_a = conditional_cover_entropy(b, a, inter, true, universe);
  const double mi = 0.5 * ((ha - ha_given_b) + (hb - hb_given_a));
  return clamp01(mi / norm);
}

double onmi(const Cover& a, const Cover& b) {
  return onmi(a, b, std::max(a.span_size(), b.span_size()));
}

}  // namespace segame
