#include <gtest/gtest.h>

#include "hcover/classify.hpp"
#include "hcover/construct.hpp"
#include "hcover/graph_io.hpp"
#include "hcover/report.hpp"
#include "test_support.hpp"

namespace hcover {
namespace {

using testing::brute_ip;
using testing::random_graph;

CoverageProfile prof(const Graph& h, int t = 2) { return profile_exact(h, t); }

Graph c4_c5() {
  const Graph parts[] = {cycle_graph(4), cycle_graph(5)};
  return disjoint_union(parts);
}

std::vector<int> ideal_parts(int n, int q, int r) {
  std::vector<int> v(q, n);
  if (r) v.push_back(r);
  return v;
}

TEST(GammaBeta, Examples) {
  struct Case {
    const char* name;
    Graph h;
    int gamma;
    std::optional<int> beta_prime, beta;
  };
  const std::vector<Case> cases = {
      {"K4", complete_graph(4), 1, 2, 2},
      {"P4", path_graph(4), 1, 2, 3},
      {"C5", cycle_graph(5), 1, 2, 2},
      {"K3", complete_graph(3), 1, 2, 2},
      {"K4+pendant", build_pendant_clique(4, 5), 5, std::nullopt, std::nullopt},
  };
  for (const auto& c : cases) {
    const GammaBeta g = gamma_beta(prof(c.h));
    EXPECT_EQ(g.gamma, c.gamma) << c.name;
    EXPECT_EQ(g.beta_prime, c.beta_prime) << c.name;
    EXPECT_EQ(g.beta, c.beta) << c.name;
  }
}

TEST(GammaBeta, GapIsOneOrTwo) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const GammaBeta g = gamma_beta(prof(random_graph(n, 0.5, rng)));
    if (!g.beta) {
      EXPECT_EQ(g.gamma, n);
      continue;
    }
    const int gap = *g.beta - g.gamma;
    EXPECT_TRUE(gap == 1 || gap == 2);
    EXPECT_GE(g.gamma, 1);
  }
}

TEST(Certify, CliquesAndCycleCertified) {
  for (int n = 3; n <= 7; ++n)
    for (int t : {2, 3}) {
      if (t > n) continue;
      const CoverageProfile p = prof(complete_graph(n), t);
      for (int r = 0; r < n; ++r) {
        const IdealCertificate c = certify_ideal(p, r);
        // With triangles, a part of size n - 2 or less but above n - t ties with splittings.
        EXPECT_EQ(c.certified, r == 0 || n - r == 1 || n - r >= t) << n << ' ' << t << ' ' << r;
        if (t == 2) EXPECT_EQ(c.route, CertificateRoute::Exchange);
      }
    }
  const CoverageProfile c5 = prof(cycle_graph(5));
  for (int r = 0; r < 5; ++r) EXPECT_TRUE(certify_ideal(c5, r).certified) << r;
}

TEST(Certify, DisjointCyclesRemainderFourFails) {
  const CoverageProfile p = prof(c4_c5());
  const IdealCertificate c = certify_ideal(p, 4);
  EXPECT_FALSE(c.certified);
  ASSERT_TRUE(c.exchange_violation.has_value());
  bool saw = false;
  for (const auto& v : c.exchange_failures) saw |= v.rule == "exchange" && v.k == 4 && v.l == 5;
  EXPECT_TRUE(saw);
  ASSERT_TRUE(c.rival.has_value());
  const long N = c.rival->sum();
  EXPECT_EQ((N - 4) % 9, 0);
  EXPECT_LE(c.rival->cost(p), PartMultiset{ideal_parts(9, static_cast<int>(N / 9), 4)}.cost(p));
  EXPECT_EQ(certify_ideal(p, 4).rival, c.rival);
}

TEST(Certify, SoundOnRandomGraphs) {
  std::mt19937_64 rng(404);
  int certified = 0, refuted = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int t = trial % 5 == 0 ? 3 : 2;
    const Graph h = random_graph(n, 0.3 + 0.1 * (trial % 6), rng);
    const CoverageProfile p = prof(h, t);
    for (int r = 0; r < n; ++r) {
      const IdealCertificate c = certify_ideal(p, r);
      if (c.certified) {
        ++certified;
        for (int q = 1; q <= 4; ++q) {
          const auto b = brute_ip(p.a, n, static_cast<long>(q) * n + r);
          ASSERT_EQ(b.optima.size(), 1u) << to_graph6(h) << " r=" << r << " q=" << q;
          EXPECT_EQ(b.optima[0], ideal_parts(n, q, r));
        }
      } else if (c.rival) {
        ++refuted;
        const long N = c.rival->sum();
        EXPECT_EQ(N % n, r);
        EXPECT_GE(c.rival->multiplicity(n), 1);
        EXPECT_NE(c.rival->parts, ideal_parts(n, static_cast<int>(N / n), r));
        EXPECT_LE(c.rival->cost(p), PartMultiset{ideal_parts(n, static_cast<int>(N / n), r)}.cost(p));
      }
    }
  }
  EXPECT_GT(certified, 100);
  EXPECT_GT(refuted, 10);
}

TEST(Classify, CliqueAllIdeal) {
  const Classification c = classify_remainders(prof(complete_graph(5)));
  EXPECT_EQ(c.n, 5);
  EXPECT_EQ(c.q_max, kDefaultQMax);
  ASSERT_EQ(c.per_r.size(), 5u);
  for (const auto& row : c.per_r) {
    EXPECT_EQ(row.verdict, Verdict::IdealCertified);
    EXPECT_TRUE(row.q_stable);
    EXPECT_EQ(row.per_q.size(), 4u);
  }
}

TEST(Classify, PathAndPendant) {
  const Classification p4 = classify_remainders(prof(path_graph(4)));
  EXPECT_EQ(p4.per_r[2].verdict, Verdict::BothPatterns);
  EXPECT_EQ(p4.per_r[2].per_q[0].optima.size(), 2u);
  EXPECT_EQ(p4.per_r[1].verdict, Verdict::IdealCertified);

  // The all-pendant shape wins once q >= 2, so only q = 1 looks elementary.
  const Classification kp = classify_remainders(prof(build_pendant_clique(4, 5)));
  const RemainderVerdict& r2 = kp.per_r[2];
  EXPECT_EQ(r2.per_q[0].verdict, Verdict::ElementaryPattern);
  EXPECT_EQ(r2.per_q[1].optima.size(), 1u);
  EXPECT_EQ(r2.per_q[1].optima[0].parts, (std::vector<int>{5, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_FALSE(r2.q_stable);
  EXPECT_EQ(r2.verdict, Verdict::Other);
}

TEST(Classify, ThresholdsOnlyForEdges) {
  EXPECT_TRUE(classify_remainders(prof(cycle_graph(5))).thresholds.has_value());
  EXPECT_FALSE(classify_remainders(prof(complete_graph(4), 3)).thresholds.has_value());
}

TEST(Classify, Deterministic) {
  const CoverageProfile p = prof(c4_c5());
  EXPECT_EQ(to_json(classify_remainders(p, 3)).dump(), to_json(classify_remainders(p, 3)).dump());
  const Classification c = classify_remainders(p, 2);
  for (const auto& row : c.per_r) EXPECT_EQ(row.verdict, Verdict::Other) << row.r;
}

TEST(Shapes, Basics) {
  EXPECT_EQ(ideal_shape(4, 2, 3).parts, (std::vector<int>{4, 4, 3}));
  EXPECT_EQ(elementary_shape(4, 2, 3).parts, (std::vector<int>{4, 4, 1, 1, 1}));
  EXPECT_EQ(ideal_shape(4, 1, 1), elementary_shape(4, 1, 1));
  EXPECT_EQ(ideal_shape(4, 1, 0).parts, (std::vector<int>{4}));
  EXPECT_EQ(to_string(Verdict::BothPatterns), "BothPatterns");
}

TEST(ShapeReport, Clique) {
  const ShapeReport s = check_theorem3_shape(prof(complete_graph(4)));
  EXPECT_TRUE(s.predicates.all_hold());
  EXPECT_TRUE(s.passed());
  EXPECT_EQ(s.rows[1].expected, "elementary");
  EXPECT_EQ(s.rows[3].expected, "ideal");
}

TEST(ShapeReport, PathTiesAreRecorded) {
  const ShapeReport s = check_theorem3_shape(prof(path_graph(4)));
  EXPECT_EQ(s.thresholds.gamma, 1);
  EXPECT_EQ(*s.thresholds.beta, 3);
  EXPECT_EQ(s.rows[2].expected, "both");
  EXPECT_TRUE(s.rows[2].pass);
  // a(3) = 3 a(1), so the mid predicate fails and r = 3 ties three ways.
  EXPECT_FALSE(s.predicates.mid.holds);
  EXPECT_FALSE(s.rows[3].pass);
  for (const auto& d : s.rows[3].deviations) EXPECT_GT(d.optima.size(), 1u);
  EXPECT_THROW(check_theorem3_shape(prof(complete_graph(4), 3)), ArgumentError);
}

TEST(ShapeReport, PredicatesImplyShapeOnRandomGraphs) {
  std::mt19937_64 rng(17);
  int held = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Graph h = random_graph(n, 0.5, rng);
    const ShapeReport s = check_theorem3_shape(prof(h));
    if (!s.predicates.all_hold()) continue;
    ++held;
    EXPECT_TRUE(s.passed()) << to_graph6(h);
  }
  EXPECT_GT(held, 5);
}

}  // namespace
}  // namespace hcover
