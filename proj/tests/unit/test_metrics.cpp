#include <gtest/gtest.h>

#include <algorithm>
#include <cstring>
#include <numeric>
#include <random>

#include "segame/metrics.hpp"

using namespace segame;

namespace {

Cover cover_of(std::initializer_list<Cover::Community> communities) {
  Cover c;
  for (const auto& m : communities) c.add(m);
  return c;
}

Cover random_partition(std::mt19937_64& rng, NodeId n, NodeId k) {
  std::vector<CommunityId> labels(n);
  std::uniform_int_distribution<CommunityId> pick(0, k - 1);
  for (auto& l : labels) l = pick(rng);
  return Cover::from_assignment(labels);
}

Cover random_cover(std::mt19937_64& rng, NodeId n) {
  Cover c;
  const NodeId k = std::uniform_int_distribution<NodeId>(1, 6)(rng);
  std::bernoulli_distribution in(0.3);
  for (NodeId i = 0; i < k; ++i) {
    Cover::Community m;
    for (NodeId x = 0; x < n; ++x) {
      if (in(rng)) m.push_back(x);
    }
    if (m.empty()) m.push_back(i % n);
    c.add(std::move(m));
  }
  return c;
}

Cover relabel(const Cover& c, const std::vector<NodeId>& perm, bool reverse_order) {
  std::vector<Cover::Community> out;
  for (const auto& m : c) {
    Cover::Community r;
    for (NodeId x : m) r.push_back(perm[x]);
    out.push_back(std::move(r));
  }
  if (reverse_order) std::reverse(out.begin(), out.end());
  Cover result;
  for (auto& m : out) result.add(std::move(m));
  return result;
}

}  // namespace

TEST(PairF1, Basics) {
  const std::vector<NodeId> a{0, 1, 2, 3};
  const std::vector<NodeId> b{2, 3, 4};
  EXPECT_DOUBLE_EQ(pair_f1(a, b), 2.0 * 2 / 7);
  EXPECT_DOUBLE_EQ(pair_f1(a, a), 1.0);
  EXPECT_THROW(pair_f1(a, {}), DomainError);
}

TEST(AvgF1, FrozenValues) {
  const Cover whole = cover_of({{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}});
  const Cover halves = cover_of({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}});
  EXPECT_NEAR(avg_f1(whole, halves), 2.0 / 3.0, 1e-15);
  const Cover triangles = cover_of({{0, 1, 2}, {3, 4, 5}});
  const Cover singletons = cover_of({{0}, {1}, {2}, {3}, {4}, {5}});
  EXPECT_NEAR(avg_f1(triangles, singletons), 0.5, 1e-15);
  EXPECT_THROW(avg_f1(Cover{}, halves), DomainError);
}

TEST(AvgF1, SymmetricBitForBit) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const Cover a = random_cover(rng, 30);
    const Cover b = random_cover(rng, 30);
    const double ab = avg_f1(a, b);
    const double ba = avg_f1(b, a);
    EXPECT_EQ(std::memcmp(&ab, &ba, sizeof ab), 0);
    EXPECT_EQ(avg_f1(a, a), 1.0);
  }
}

TEST(Nmi, IdentityIndependenceAndTrivial) {
  EXPECT_EQ(nmi(cover_of({{0, 1}, {2, 3}}), cover_of({{0, 2}, {1, 3}})), 0.0);
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const Cover a = random_partition(rng, 25, 4);
    EXPECT_EQ(nmi(a, a), 1.0);
  }
  EXPECT_EQ(nmi(cover_of({{0, 1, 2}}), cover_of({{0, 1, 2}})), 1.0);
}

TEST(Nmi, RejectsOverlapAndMismatchedNodeSets) {
  EXPECT_THROW(nmi(cover_of({{0, 1}, {1, 2}}), cover_of({{0, 1, 2}})), ValidationError);
  EXPECT_THROW(nmi(cover_of({{0, 1}}), cover_of({{0, 1, 2}})), ValidationError);
}

TEST(Onmi, WorkedPair) {
  const Cover a = cover_of({{0, 1, 2, 3, 4}, {4, 5, 6, 7}});
  const Cover b = cover_of({{0, 1, 2}, {3, 4, 5}, {5, 6, 7}});
  EXPECT_NEAR(onmi(a, b, 8), 0.3215805701291933, 1e-15);
  EXPECT_NEAR(onmi(b, a, 8), 0.3215805701291933, 1e-15);
}

TEST(Onmi, IdentityIsExactlyOne) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 300; ++i) {
    const Cover a = random_cover(rng, 40);
    EXPECT_EQ(onmi(a, a, 40), 1.0);
  }
}

TEST(Onmi, IndependentBipartitionIsZero) {
  EXPECT_NEAR(onmi(cover_of({{0, 1}, {2, 3}}), cover_of({{0, 2}, {1, 3}}), 4), 0.0, 1e-15);
}

TEST(Onmi, AgreesWithNmiOnBipartitions) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 300; ++i) {
    const Cover a = random_partition(rng, 30, 2);
    const Cover b = random_partition(rng, 30, 2);
    if (a.size() != 2 || b.size() != 2) continue;
    EXPECT_NEAR(onmi(a, b, 30), nmi(a, b), 1e-9);
  }
}

// McDaid ONMI and classical NMI are different functionals once either side
// has three or more communities.
TEST(Onmi, DiffersFromNmiForThreeBlocks) {
  const Cover a = cover_of({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  const Cover b = cover_of({{0, 1, 3}, {2, 4, 6}, {5, 7, 8}});
  EXPECT_GT(std::abs(onmi(a, b, 9) - nmi(a, b)), 1e-3);
}

TEST(Metrics, InvariantUnderRelabelingAndOrder) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 200; ++i) {
    const NodeId n = 30;
    const Cover a = random_cover(rng, n);
    const Cover b = random_cover(rng, n);
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Cover pa = relabel(a, perm, true);
    const Cover pb = relabel(b, perm, false);
    EXPECT_NEAR(avg_f1(a, b), avg_f1(pa, pb), 1e-12);
    EXPECT_NEAR(onmi(a, b, n), onmi(pa, pb, n), 1e-12);
    EXPECT_NEAR(onmi(a, b, n), onmi(b, a, n), 1e-12);
    const double v = onmi(a, b, n);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(Onmi, UniverseMustContainMembers) {
  EXPECT_THROW(onmi(cover_of({{0, 5}}), cover_of({{0}}), 3), ValidationError);
  EXPECT_THROW(onmi(Cover{}, cover_of({{0}}), 3), DomainError);
}
