#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

#include "game_internal.hpp"
#include "segame/game.hpp"

namespace segame::detail {

namespace {

constexpr std::size_t kStripes = 1024;
constexpr std::size_t kChunk = 64;

// Shared arrays are read without locks by every worker and written under the
// stripe locks of the affected communities, so all access goes through
// atomic_ref. Relaxed order suffices: any stale read is revalidated under
// the lock before a move is committed.
class SharedPartition {
 public:
  explicit SharedPartition(PartitionState& state) : state_(state) {}

  CommunityId community_of(NodeId y) const {
    return std::atomic_ref<CommunityId>(state_.assignment[y]).load(std::memory_order_relaxed);
  }

  CommunityStats stats(CommunityId c) const {
    CommunityStats& s = state_.stats[c];
    return {std::atomic_ref<double>(s.volume).load(std::memory_order_relaxed),
            std::atomic_ref<double>(s.cut).load(std::memory_order_relaxed),
            std::atomic_ref<std::uint32_t>(s.size).load(std::memory_order_relaxed)};
  }

  void store(CommunityId c, const CommunityStats& value) {
    CommunityStats& s = state_.stats[c];
    std::atomic_ref<double>(s.volume).store(value.volume, std::memory_order_relaxed);
    std::atomic_ref<double>(s.cut).store(value.cut, std::memory_order_relaxed);
    std::atomic_ref<std::uint32_t>(s.size).store(value.size, std::memory_order_relaxed);
  }

  void assign(NodeId x, CommunityId c) {
    std::atomic_ref<CommunityId>(state_.assignment[x]).store(c, std::memory_order_relaxed);
  }

  void add_live(long delta) {
    std::atomic_ref<std::size_t> live(state_.live_communities);
    if (delta > 0) {
      live.fetch_add(static_cast<std::size_t>(delta), std::memory_order_relaxed);
    } else {
      live.fetch_sub(static_cast<std::size_t>(-delta), std::memory_order_relaxed);
    }
  }

  PartitionState& state() { return state_; }

 private:
  PartitionState& state_;
};

// Locks the stripes of two communities in a fixed order.
class PairLock {
 public:
  PairLock(std::vector<std::mutex>& stripes, CommunityId a, CommunityId b) {
    std::size_t i = a % stripes.size();
    std::size_t j = b % stripes.size();
    if (i > j) std::swap(i, j);
    first_ = &stripes[i];
    second_ = i == j ? nullptr : &stripes[j];
    first_->lock();
    if (second_) second_->lock();
  }
  ~PairLock() {
    if (second_) second_->unlock();
    first_->unlock();
  }
  PairLock(const PairLock&) = delete;
  PairLock& operator=(const PairLock&) = delete;

 private:
  std::mutex* first_;
  std::mutex* second_;
};

struct PairLinks {
  NodeLinks src;
  NodeLinks dst;
};

PairLinks links_to_pair(const Graph& graph, const SharedPartition& shared, NodeId x,
                        CommunityId src, CommunityId dst) {
  PairLinks out;
  for (const Adjacent& a : graph.out_neighbors(x)) {
    if (a.node == x) continue;
    const CommunityId c = shared.community_of(a.node);
    if (c == src) out.src.out += a.weight;
    if (c == dst) out.dst.out += a.weight;
  }
  if (graph.directed()) {
    for (const Adjacent& a : graph.in_neighbors(x)) {
      if (a.node == x) continue;
      const CommunityId c = shared.community_of(a.node);
      if (c == src) out.src.in += a.weight;
      if (c == dst) out.dst.in += a.weight;
    }
  } else {
    out.src.in = out.src.out;
    out.dst.in = out.dst.out;
  }
  return out;
}

}  // namespace

SweepRecord parallel_sweep(const Graph& graph, PartitionState& state,
                           std::span<const NodeId> order, const DetectorConfig& config,
                           const DetectionHooks& hooks) {
  SharedPartition shared(state);
  std::vector<std::mutex> stripes(std::min<std::size_t>(kStripes, graph.node_count()));
  std::atomic<std::size_t> cursor{0};
  const double vol = graph.total_volume();

  const unsigned workers = config.workers;
  std::vector<SweepRecord> partial(workers);

  auto work = [&](unsigned id) {
    LinkAccumulator scratch(graph.node_count());
    SweepRecord& record = partial[id];
    for (;;) {
      const std::size_t begin = cursor.fetch_add(kChunk, std::memory_order_relaxed);
      if (begin >= order.size()) break;
      const std::size_t end = std::min(order.size(), begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        const NodeId x = order[i];
        // Only the worker that owns x ever moves it.
        const CommunityId own = shared.community_of(x);
        scratch.gather(graph, x, [&](NodeId y) { return shared.community_of(y); });
        const Strategy s = evaluate_strategy(graph, x, own, config.rule, config.log_base, scratch,
                                             [&](CommunityId c) { return shared.stats(c); });
        if (s.stays()) continue;
        const CommunityId dst = *s.target;

        PairLock lock(stripes, own, dst);
        // Neighbors may have moved since the estimate: recompute the
        // increments against the locked communities and re-check the move.
        const CommunityStats src_stats = shared.stats(own);
        const CommunityStats dst_stats = shared.stats(dst);
        if (dst_stats.size == 0) continue;
        const PairLinks links = links_to_pair(graph, shared, x, own, dst);
        const NodeProfile node = NodeProfile::of(graph, x);
        const double leave = delta_leave(vol, src_stats, node, links.src, config.log_base);
        const double transfer =
            leave - delta_leave(vol, join_stats(dst_stats, node, links.dst), node, links.dst,
                                config.log_base);
        const double floor = config.rule == StrategyRule::leave_baseline ? leave : 0.0;
        if (!(transfer > floor)) continue;

        CommunityStats next_src = leave_stats(src_stats, node, links.src);
        if (next_src.size == 0) next_src = {};
        shared.store(own, next_src);
        shared.store(dst, join_stats(dst_stats, node, links.dst));
        shared.assign(x, dst);
        if (next_src.size == 0) shared.add_live(-1);
        ++record.moved;
        record.delta_sum += transfer;
        if (hooks.on_transfer) hooks.on_transfer(shared.state(), x, own, dst, transfer);
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  SweepRecord total;
  for (const SweepRecord& r : partial) {
    total.moved += r.moved;
    total.delta_sum += r.delta_sum;
  }
  return total;
}

}  // namespace segame::detail
