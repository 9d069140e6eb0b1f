#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcover/classify.hpp"
#include "hcover/rational.hpp"

namespace hcover {

struct GapCheck {
  bool holds = true;
  int k_max = 0;                       // floor(eps sqrt(n ln n)), capped at n
  std::optional<int> first_violation;  // smallest k with sum_{i<=k} (d_i - d_1) <= C(k, 2)
};

// Instance check of the degree-gap inequality for 2 <= k <= k_max.
GapCheck degree_gap_check(const Graph& g, Rational eps);

struct ExperimentRecord {
  int n = 0;
  double p = 0;
  std::uint64_t seed = 0;
  int q_max = 0;
  std::string graph6;
  std::vector<int> degree_sequence;  // ascending
  std::vector<Count> a;              // edge coverage profile
  GammaBeta thresholds;
  ShapeReport shape;
  GapCheck gap;
};

inline const Rational kDefaultGapEps{1, 2};

ExperimentRecord run_experiment(int n, double p, std::uint64_t seed, int q_max = 2, Rational eps = kDefaultGapEps);

struct ScalingRow {
  int n = 0;
  int trials = 0;
  int with_beta = 0;  // samples where beta' exists
  double gamma_mean = 0;
  double gamma_sd = 0;  // population standard deviation
  int gamma_min = 0;
  int gamma_max = 0;
  double sqrt_n_log_n = 0;
};

struct ScalingReport {
  double p = 0;
  std::uint64_t seed0 = 0;
  std::vector<ScalingRow> rows;
  std::string table() const;  // aligned text
};

// gamma over seeds seed0, seed0 + 1, ..., seed0 + trials - 1 for each n.
ScalingReport scaling_report(const std::vector<int>& ns, double p, int trials, std::uint64_t seed0);

}  // namespace hcover
