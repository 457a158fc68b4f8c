#include "reference.hpp"

#include <cmath>
#include <map>

namespace segame::testing {

std::vector<double> reference_degrees(const RawGraph& g) {
  std::vector<double> d(g.n, 0.0);
  for (const Edge& e : g.edges) {
    if (g.directed) {
      d[e.target] += e.weight;
    } else if (e.source == e.target) {
      d[e.source] += e.weight;
    } else {
      d[e.source] += e.weight;
      d[e.target] += e.weight;
    }
  }
  return d;
}

namespace {

double log_of(double x, bool natural) { return natural ? std::log(x) : std::log2(x); }

double community_term(const RawGraph& g, const std::vector<double>& d, double vol,
                      const std::vector<char>& in, bool natural) {
  double v = 0.0;
  for (NodeId x = 0; x < g.n; ++x) {
    if (in[x]) v += d[x];
  }
  double cut = 0.0;
  for (const Edge& e : g.edges) {
    if (g.directed) {
      if (in[e.target] && !in[e.source]) cut += e.weight;
    } else if (in[e.source] != in[e.target]) {
      cut += e.weight;
    }
  }
  if (v == 0.0) return 0.0;
  double h = -cut / vol * log_of(v / vol, natural);
  for (NodeId x = 0; x < g.n; ++x) {
    if (in[x] && d[x] > 0.0) h -= d[x] / vol * log_of(d[x] / v, natural);
  }
  return h;
}

}  // namespace

double reference_entropy(const RawGraph& g, const std::vector<CommunityId>& label,
                         bool natural_log) {
  const auto d = reference_degrees(g);
  double vol = 0.0;
  for (double x : d) vol += x;
  std::map<CommunityId, std::vector<char>> members;
  for (NodeId x = 0; x < g.n; ++x) {
    if (label[x] == kNoCommunity) continue;
    auto& in = members[label[x]];
    if (in.empty()) in.assign(g.n, 0);
    in[x] = 1;
  }
  double h = 0.0;
  for (const auto& [c, in] : members) h += community_term(g, d, vol, in, natural_log);
  return h;
}

double reference_cover_entropy(const RawGraph& g, const Cover& cover) {
  const auto d = reference_degrees(g);
  double vol = 0.0;
  for (double x : d) vol += x;
  double h = 0.0;
  for (const auto& community : cover) {
    std::vector<char> in(g.n, 0);
    for (NodeId x : community) in[x] = 1;
    h += community_term(g, d, vol, in, false);
  }
  return h;
}

std::vector<std::vector<CommunityId>> all_partitions(NodeId n) {
  std::vector<std::vector<CommunityId>> out;
  std::vector<CommunityId> rgs(n, 0);
  std::vector<CommunityId> max_before(n, 0);
  if (n == 0) return {{}};
  for (;;) {
    out.push_back(rgs);
    NodeId i = n - 1;
    for (;; --i) {
      if (i == 0) return out;
      const CommunityId limit = i == 0 ? 0 : max_before[i] + 1;
      if (rgs[i] < limit) break;
    }
    ++rgs[i];
    for (NodeId j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      max_before[j] = std::max(max_before[j - 1], rgs[j - 1]);
    }
  }
}

RawGraph random_graph(std::mt19937_64& rng, const CorpusOptions& options, bool* integer_weights) {
  RawGraph g;
  g.n = std::uniform_int_distribution<NodeId>(2, options.max_nodes)(rng);
  g.directed = std::bernoulli_distribution(0.5)(rng);
  const bool integer = std::bernoulli_distribution(0.5)(rng);
  if (integer_weights) *integer_weights = integer;
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, options.max_edges)(rng);
  std::uniform_int_distribution<NodeId> node(0, g.n - 1);
  std::uniform_int_distribution<int> small(1, 5);
  std::uniform_real_distribution<double> real(0.1, 3.0);
  std::bernoulli_distribution loop(0.03);
  for (std::size_t i = 0; i < m; ++i) {
    const NodeId u = node(rng);
    NodeId v = node(rng);
    if (loop(rng)) v = u;
    const double w = integer ? small(rng) : real(rng);
    g.edges.push_back({u, v, w});
  }
  return g;
}

std::vector<CommunityId> random_labels(std::mt19937_64& rng, NodeId n, NodeId k) {
  std::uniform_int_distribution<CommunityId> pick(0, std::max<NodeId>(1, std::min(k, n)) - 1);
  std::vector<CommunityId> out(n);
  for (auto& c : out) c = pick(rng);
  return out;
}

}  // namespace segame::testing
