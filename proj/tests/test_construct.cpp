#include <gtest/gtest.h>

#include "hcover/canonical.hpp"
#include "hcover/classify.hpp"
#include "hcover/construct.hpp"
#include "hcover/cover.hpp"
#include "hcover/ip.hpp"
#include "hcover/oracle.hpp"
#include "test_support.hpp"

namespace hcover {
namespace {

using testing::brute_cliques;
using testing::random_graph;

TEST(Construct, LGluingOfTriangle) {
  const Graph k3 = complete_graph(3);
  const CoverageProfile p = profile_exact(k3, 2);
  Graph k4e = complete_graph(4);
  k4e.remove_edge(0, 3);
  EXPECT_TRUE(are_isomorphic(build_L(k3, 2, 1, p), k4e));
  EXPECT_EQ(build_L(k3, 2, 0, p), k3);
  EXPECT_THROW(build_L(k3, 2, 3, p), ArgumentError);
  EXPECT_THROW(build_L(k3, 3, 1, p), ArgumentError);
}

TEST(Construct, LGluingCountsAndCover) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph h = random_graph(n, 0.6, rng);
    for (int t : {2, 3}) {
      const CoverageProfile p = profile_exact(h, t);
      for (int r = 0; r < n; ++r) {
        const Graph l = build_L(h, t, r, p);
        EXPECT_EQ(l.order(), n + r);
        EXPECT_EQ(brute_cliques(l, t), p.a[n] + p.a[r]);
        EXPECT_TRUE(are_isomorphic(l.induced(VertexSet(low_bits(n))), h));
      }
    }
  }
}

TEST(Construct, MGluing) {
  const Graph h = build_pendant_clique(4, 5);
  const Graph m = build_M(h, 7);
  EXPECT_TRUE(are_isomorphic(m, build_pendant_clique(4, 7)));
  EXPECT_EQ(build_M(h, 5), h.relabelled(std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_THROW(build_M(h, 4), ArgumentError);
  EXPECT_THROW(build_M(h, 10), ArgumentError);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph g = random_graph(n, 0.6, rng);
    for (int b = n; b < 2 * n; ++b) {
      const Graph mb = build_M(g, b);
      EXPECT_EQ(mb.edge_count(), g.edge_count() + static_cast<long>(b - n) * g.min_degree());
      for (int i = n - 1; i < b; ++i)
        EXPECT_TRUE(are_isomorphic(mb.induced(VertexSet(low_bits(n - 1) | bit(i))), g));
    }
  }
}

TEST(Construct, IdealExtremalCountsAndCovers) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph h = random_graph(n, 0.6, rng);
    const int t = trial % 3 == 0 ? 3 : 2;
    const CoverageProfile p = profile_exact(h, t);
    for (int N = n; N <= 3 * n; ++N) {
      const Graph g = build_ideal_extremal(h, t, N, p);
      const int q = N / n, r = N % n;
      EXPECT_EQ(g.order(), N);
      EXPECT_EQ(count_cliques(g, t), q * p.a[n] + p.a[r]);
      EXPECT_NO_THROW(validate_cover(g, h, ideal_extremal_cover(h, N, p)));
      if (certify_ideal(p, r).certified) EXPECT_EQ(count_cliques(g, t), solve_ip(p, N, 1).value);
    }
  }
}

TEST(Construct, ElementaryExtremal) {
  const Graph h = path_graph(4);
  const std::vector<int> parts{4, 6};
  const Graph g = build_elementary_extremal(h, 10, parts);
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.edge_count(), 3 + 5);
  EXPECT_NO_THROW(validate_cover(g, h, elementary_extremal_cover(h, parts)));
  EXPECT_TRUE(is_covered(g, h).covered);
  const std::vector<int> bad{3, 7};
  EXPECT_THROW(build_elementary_extremal(h, 10, bad), ArgumentError);
  const std::vector<int> short_sum{4, 5};
  EXPECT_THROW(build_elementary_extremal(h, 10, short_sum), ArgumentError);
}

TEST(Construct, RealizationAttainsEveryOptimum) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph h = random_graph(n, 0.55, rng);
    const int t = trial % 4 == 0 ? 3 : 2;
    const CoverageProfile p = profile_exact(h, t);
    for (int N = n; N <= 3 * n; ++N) {
      const IpSolution s = solve_ip(p, N, 20);
      for (const auto& m : s.optima) {
        const Graph g = build_realization(h, t, m.parts, p);
        EXPECT_EQ(g.order(), N);
        EXPECT_EQ(count_cliques(g, t), s.value);
        EXPECT_NO_THROW(validate_cover(g, h, realization_cover(h, m.parts, p)));
      }
    }
  }
  const Graph k3 = complete_graph(3);
  const CoverageProfile p = profile_exact(k3, 2);
  const std::vector<int> no_whole{2, 2};
  EXPECT_THROW(build_realization(k3, 2, no_whole, p), ArgumentError);
}

TEST(Construct, Tightness) {
  const Graph g = build_tightness(4, 2);
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(g.degree_sequence(), std::vector<int>(9, 2));
  const Graph parts[] = {cycle_graph(4), cycle_graph(5)};
  EXPECT_EQ(g, disjoint_union(parts));
  EXPECT_EQ(build_tightness(6, 4).degree_sequence(), std::vector<int>(13, 4));
  EXPECT_THROW(build_tightness(4, 3), ArgumentError);
  EXPECT_THROW(build_tightness(4, 4), ArgumentError);
  EXPECT_THROW(build_tightness(4, 0), ArgumentError);
}

TEST(Construct, PendantClique) {
  const Graph g = build_pendant_clique(4, 7);
  EXPECT_EQ(g.edge_count(), 6 + 3);
  EXPECT_EQ(g.degree(0), 6);
  EXPECT_THROW(build_pendant_clique(4, 4), ArgumentError);
}

TEST(Cover, ValidationRejectsBadSets) {
  const Graph g = complete_graph(4);
  const Graph h = complete_graph(3);
  CoverAssignment c;
  for (int v = 0; v < 4; ++v) c.sets.push_back(VertexSet(0b0111 | bit(v)).without(v == 3 ? 0 : 3));
  EXPECT_NO_THROW(validate_cover(g, h, c));
  CoverAssignment missing = c;
  missing.sets.pop_back();
  EXPECT_THROW(validate_cover(g, h, missing), ContractError);
  CoverAssignment wrong = c;
  wrong.sets[3] = VertexSet(0b0111);
  EXPECT_THROW(validate_cover(g, h, wrong), ContractError);
  CoverAssignment big = c;
  big.sets[0] = VertexSet(0b1111);
  EXPECT_THROW(validate_cover(g, h, big), ContractError);
  Graph p = path_graph(4);
  CoverAssignment nocopy;
  for (int v = 0; v < 4; ++v) nocopy.sets.push_back(VertexSet(0b0111 | bit(v)).without(v == 3 ? 0 : 3));
  EXPECT_THROW(validate_cover(p, h, nocopy), ContractError);
}

}  // namespace
}  // namespace hcover
