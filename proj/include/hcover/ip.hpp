#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcover/profile.hpp"

namespace hcover {

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultOptimaCap = 10000;

// Parts of an integer-program solution, non-increasing; x_k is the multiplicity of k.
struct PartMultiset {
  std::vector<int> parts;

  int multiplicity(int k) const;
  long sum() const;
  Count cost(const CoverageProfile& p) const;
  std::string str() const;  // "[5,5,2]"

  friend bool operator==(const PartMultiset&, const PartMultiset&) = default;
  friend auto operator<=>(const PartMultiset&, const PartMultiset&) = default;
};

struct IpSolution {
  int n = 0;
  long target = 0;
  Count value = 0;
  std::vector<PartMultiset> optima;  // ascending lexicographic order
  bool overflow = false;             // more optima exist than the cap allowed
};

// min sum a[k] x_k  s.t.  sum k x_k = N, x_k >= 0, x_n >= 1.
// One part n is reserved and the residue N - n is an unbounded equality knapsack.
IpSolution solve_ip(const CoverageProfile& p, long target, std::size_t cap = kDefaultOptimaCap);

struct OptimaList {
  std::vector<PartMultiset> optima;
  bool overflow = false;
};

OptimaList enumerate_optima(const CoverageProfile& p, long target, std::size_t cap = kDefaultOptimaCap);

struct CovBounds {
  Rational c;
  Count lower = 0;  // ceil(c N)
  Count upper = 0;  // a[n] + floor(c N)
};

CovBounds cov_bounds(const CoverageProfile& p, long target);

// (q + 1) C(n, t) - C(n - r, t) with N = q n + r.
Count closed_form_clique(int n, int t, long target);

struct ConvLemmaResult {
  std::vector<int> maximizer;  // non-increasing
  Count value = 0;
  bool unique = false;           // every maximizing vector is a permutation of `maximizer`
  bool matches_pattern = false;  // k slots at n, one at r, the rest 0
};

// Brute-force maximisation of sum C(x_i, 2) over x in {0..n}^m with sum x = k n + r.
ConvLemmaResult check_conv_lemma(int n, int k, int r, int m);

std::string format_solution(const IpSolution& s);  // "value=13 optima=[[5,5,2]]"

}  // namespace hcover
