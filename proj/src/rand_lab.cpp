#include "hcover/rand_lab.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hcover/graph_io.hpp"

namespace hcover {

namespace {

double sqrt_n_log_n(int n) { return n < 2 ? 0.0 : std::sqrt(n * std::log(static_cast<double>(n))); }

}  // namespace

GapCheck degree_gap_check(const Graph& g, Rational eps) {
  if (eps < Rational(0)) throw ArgumentError("gap check needs eps >= 0");
  const int n = g.order();
  GapCheck out;
  const double scale = static_cast<double>(eps.num()) / static_cast<double>(eps.den());
  out.k_max = std::min(n, static_cast<int>(std::floor(scale * sqrt_n_log_n(n))));
  const std::vector<int> d = g.degree_sequence();
  Count gap = 0;
  for (int k = 2; k <= out.k_max; ++k) {
    gap += d[k - 1] - d[0];
    if (gap <= binomial(k, 2)) {
      out.holds = false;
      out.first_violation = k;
      break;
    }
  }
  return out;
}

ExperimentRecord run_experiment(int n, double p, std::uint64_t seed, int q_max, Rational eps) {
  ExperimentRecord rec;
  rec.n = n;
  rec.p = p;
  rec.seed = seed;
  rec.q_max = q_max;
  const Graph g = random_gnp(n, p, seed);
  const CoverageProfile prof = profile_exact(g, 2);
  rec.graph6 = n > 0 ? to_graph6(g) : "";
  rec.degree_sequence = g.degree_sequence();
  rec.a = prof.a;
  rec.thresholds = gamma_beta(prof);
  rec.shape = check_theorem3_shape(prof, q_max);
  rec.gap = degree_gap_check(g, eps);
  return rec;
}

ScalingReport scaling_report(const std::vector<int>& ns, double p, int trials, std::uint64_t seed0) {
  if (trials <= 0) throw ArgumentError("scaling report needs at least one trial");
  if (ns.empty()) throw ArgumentError("scaling report needs at least one n");
  ScalingReport rep;
  rep.p = p;
  rep.seed0 = seed0;
  for (int n : ns) {
    ScalingRow row;
    row.n = n;
    row.trials = trials;
    row.sqrt_n_log_n = sqrt_n_log_n(n);
    double sum = 0, sq = 0;
    for (int i = 0; i < trials; ++i) {
      const Graph g = random_gnp(n, p, seed0 + static_cast<std::uint64_t>(i));
      const GammaBeta gb = gamma_beta(profile_exact(g, 2));
      if (gb.beta_prime) ++row.with_beta;
      sum += gb.gamma;
      sq += static_cast<double>(gb.gamma) * gb.gamma;
      row.gamma_min = i == 0 ? gb.gamma : std::min(row.gamma_min, gb.gamma);
      row.gamma_max = i == 0 ? gb.gamma : std::max(row.gamma_max, gb.gamma);
    }
    row.gamma_mean = sum / trials;
    row.gamma_sd = std::sqrt(std::max(0.0, sq / trials - row.gamma_mean * row.gamma_mean));
    rep.rows.push_back(row);
  }
  return rep;
}

std::string ScalingReport::table() const {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%4s %7s %7s %10s %9s %6s %6s %14s\n", "n", "trials", "beta'", "gamma_mean",
                "gamma_sd", "min", "max", "sqrt(n ln n)");
  os << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%4d %7d %7d %10.3f %9.3f %6d %6d %14.3f\n", r.n, r.trials, r.with_beta,
                  r.gamma_mean, r.gamma_sd, r.gamma_min, r.gamma_max, r.sqrt_n_log_n);
    os << line;
  }
  return os.str();
}

}  // namespace hcover
