#include "segame/entropy.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace segame {

namespace {

double log_in(double x, LogBase base) noexcept {
  return base == LogBase::bits ? std::log2(x) : std::log(x);
}

// a * log(b), with the 0 * log(anything) = 0 convention.
double xlog(double a, double b, LogBase base) noexcept {
  return a == 0.0 ? 0.0 : a * log_in(b, base);
}

// Entropy change of splitting x out of `before` into `after` + {x}.
double leave_gain(double total_volume, const CommunityStats& before, const CommunityStats& after,
                  NodeProfile node, LogBase base) noexcept {
  const double vol = total_volume;
  // Cut never exceeds volume, so a community with no volume left has no
  // cut term either; the guards also absorb rounding residue near zero.
  double sum = 0.0;
  if (before.volume > 0.0) {
    sum -= xlog(before.cut, before.volume / vol, base);
    sum += xlog(node.degree, before.volume / vol, base);
  }
  if (after.volume > 0.0) {
    sum += xlog(after.cut, after.volume / vol, base);
    sum += xlog(after.volume, before.volume / after.volume, base);
  }
  // A self-loop stays inside the singleton, so {x} cuts d_x - loop, not d_x.
  sum -= xlog(node.self_loop, node.degree / vol, base);
  return sum / vol;
}

}  // namespace

double entropy_2d(const Graph& graph, const Cover& cover, LogBase base) {
  const double vol = graph.total_volume();
  if (cover.empty()) return 0.0;
  if (!(vol > 0.0)) throw DomainError("structural entropy needs a positive total volume");

  std::vector<char> member(graph.node_count(), 0);
  double h = 0.0;
  for (const auto& community : cover) {
    for (NodeId x : community) {
      if (x >= graph.node_count()) throw ValidationError("community member outside the graph");
      member[x] = 1;
    }
    double volume = 0.0;
    double cut = 0.0;
    for (NodeId x : community) {
      volume += graph.degree(x);
      // Undirected: edges to non-members. Directed: edges entering from non-members.
      for (const Adjacent& a : graph.in_neighbors(x)) {
        if (!member[a.node]) cut += a.weight;
      }
    }
    if (volume <= 0.0) {
      if (cut > 0.0) throw DomainError("community with zero volume has a positive cut");
    } else {
      h -= cut / vol * log_in(volume / vol, base);
      for (NodeId x : community) {
        const double d = graph.degree(x);
        if (d > 0.0) h -= d / vol * log_in(d / volume, base);
      }
    }
    for (NodeId x : community) member[x] = 0;
  }
  return h;
}

double node_entropy_baseline(const Graph& graph, LogBase base) {
  const double vol = graph.total_volume();
  if (!(vol > 0.0)) return 0.0;
  double h = 0.0;
  for (NodeId x = 0; x < graph.node_count(); ++x) {
    const double d = graph.degree(x);
    if (d > 0.0) h -= d / vol * log_in(d / vol, base);
  }
  return h;
}

CommunityStats leave_stats(const CommunityStats& stats, NodeProfile node,
                           NodeLinks links) noexcept {
  return {stats.volume - node.degree,
          stats.cut + links.in + links.out - node.degree + node.self_loop,
          stats.size > 0 ? stats.size - 1 : 0};
}

CommunityStats leave_stats(const CommunityStats& stats, double degree, double internal) noexcept {
  return leave_stats(stats, {degree, 0.0}, NodeLinks::undirected(internal));
}

CommunityStats leave_stats(const CommunityStats& stats, double degree, double internal_in,
                           double internal_out) noexcept {
  return leave_stats(stats, {degree, 0.0}, {internal_in, internal_out});
}

CommunityStats join_stats(const CommunityStats& stats, NodeProfile node, NodeLinks links) noexcept {
  return {stats.volume + node.degree,
          stats.cut - links.in - links.out + node.degree - node.self_loop, stats.size + 1};
}

double delta_leave(double total_volume, const CommunityStats& stats, NodeProfile node,
                   NodeLinks links, LogBase base) noexcept {
  if (stats.size <= 1) return 0.0;
  return leave_gain(total_volume, stats, leave_stats(stats, node, links), node, base);
}

double delta_transfer(double total_volume, const CommunityStats& src, NodeLinks src_links,
                      const CommunityStats& dst, NodeLinks dst_links, NodeProfile node,
                      LogBase base, bool same_community) noexcept {
  if (same_community) return 0.0;
  return delta_leave(total_volume, src, node, src_links, base) -
         delta_leave(total_volume, join_stats(dst, node, dst_links), node, dst_links, base);
}

double delta_overlap(double total_volume, const CommunityStats& dst, NodeLinks dst_links,
                     NodeProfile node, LogBase base) noexcept {
  return -delta_leave(total_volume, join_stats(dst, node, dst_links), node, dst_links, base);
}

}  // namespace segame
