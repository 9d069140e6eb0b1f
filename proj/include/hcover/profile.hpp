#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcover/cliques.hpp"
#include "hcover/graph.hpp"
#include "hcover/rational.hpp"

namespace hcover {

class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coverage and density tables of H for K_t, indexed by k = 0..n.
//   a[k] = min over k-sets A of the number of K_t copies meeting A
//   e[k] = max over k-sets A of the number of K_t copies inside H[A]
// related by a[k] = total - e[n - k].
struct CoverageProfile {
  int n = 0;
  int t = 0;
  Count total = 0;
  std::vector<Count> a;
  std::vector<Count> e;
  bool exact = false;
  std::vector<VertexSet> witness_a;
  std::vector<VertexSet> witness_e;
};

struct ProfileOptions {
  int exact_max = 0;  // 0: default_exact_max(t)
  int threads = 0;    // 0: HCOVER_THREADS, else 1
};

int default_exact_max(int t);

// Worker count from HCOVER_THREADS (at least 1).
int env_threads();

// Copies of K_t in h with at least one vertex in `set`.
Count a_of_set(const Graph& h, int t, VertexSet set);

// Exhaustive sweep; witnesses are the lexicographically smallest optimal sets
// for e, and their complements for a.
CoverageProfile profile_exact(const Graph& h, int t, const ProfileOptions& options = {});

// Greedy and swap local search with `effort` random restarts per k.
// e is a lower bound on the true table and a the dual upper bound.
CoverageProfile profile_heuristic(const Graph& h, int t, int effort, std::uint64_t seed = 1);

struct RatioMin {
  Rational c;
  std::vector<int> argmin;
};

// min over k in [1, n] of a[k]/k and every k attaining it.
RatioMin ratio_min(const CoverageProfile& p);

struct PredicateCheck {
  bool applies = false;
  bool holds = true;
  std::vector<std::pair<int, int>> failures;  // (k, 0) for single-index checks
};

struct PredicateReport {
  int regular_degree = -1;          // d when h is d-regular
  PredicateCheck regular_identity;  // a[k] + e[k] = d k
  PredicateCheck half_degree_bound; // a[k] >= k (n - k) / 2 when 2 delta >= n - 1
  PredicateCheck e_superadditive;   // e[k] + e[l] < e[k + l], k + l <= n
  PredicateCheck a_exchange;        // a[k] + a[l] > a[n] + a[k + l - n], k, l < n <= k + l
};

inline constexpr std::size_t kMaxReportedFailures = 64;

// Edge-count predicates of the t = 2 profile.
PredicateReport check_profile_predicates(const CoverageProfile& p, const Graph& h);

// "k a[k] e[k] witnessA witnessE", one line per k.
std::string profile_table(const CoverageProfile& p);

}  // namespace hcover
