#include "hcover/ip.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace hcover {

namespace {

constexpr Count kInf = std::numeric_limits<Count>::max() / 4;
// Largest knapsack residue the DP table is allowed to span.
constexpr long kMaxResidue = 1L << 22;

Count add_checked(Count x, Count y) {
  if (x >= kInf || y >= kInf) return kInf;
  Count out;
  if (__builtin_add_overflow(x, y, &out) || out >= kInf) throw std::overflow_error("objective overflow");
  return out;
}

void require_exact(const CoverageProfile& p) {
  if (!p.exact) throw ArgumentError("integer program needs an exact profile");
  if (p.n < 1) throw ArgumentError("profile of an empty graph");
}

void require_feasible(const CoverageProfile& p, long target) {
  if (target < p.n)
    throw InfeasibleError("N = " + std::to_string(target) + " < n = " + std::to_string(p.n) +
                          ": no H-covered graph exists on fewer than n vertices");
  if (target - p.n > kMaxResidue) throw SizeError("target N too large for the knapsack table");
}

// table[m][s]: minimum cost of parts of size <= m summing to s.
class Knapsack {
 public:
  Knapsack(const CoverageProfile& p, long residue) : p_(p), width_(residue + 1) {
    table_.assign(static_cast<std::size_t>(p.n + 1) * width_, kInf);
    cell(0, 0) = 0;
    for (int m = 1; m <= p.n; ++m)
      for (long s = 0; s < width_; ++s) {
        Count best = at(m - 1, s);
        if (s >= m) best = std::min(best, add_checked(p.a[m], at(m, s - m)));
        cell(m, s) = best;
      }
  }

  Count at(int m, long s) const { return table_[static_cast<std::size_t>(m) * width_ + s]; }

  // Optimal multisets for (m, s), largest part first, descending lexicographic.
  void enumerate(int m, long s, std::vector<int>& cur, std::vector<PartMultiset>& out, std::size_t cap,
                 bool& overflow) const {
    if (overflow) return;
    if (s == 0) {
      if (out.size() == cap) {
        overflow = true;
        return;
      }
      out.push_back(PartMultiset{cur});
      return;
    }
    const Count goal = at(m, s);
    for (int part = static_cast<int>(std::min<long>(m, s)); part >= 1 && !overflow; --part) {
      const Count rest = at(part, s - part);
      if (rest >= kInf || add_checked(p_.a[part], rest) != goal) continue;
      cur.push_back(part);
      enumerate(part, s - part, cur, out, cap, overflow);
      cur.pop_back();
    }
  }

 private:
  Count& cell(int m, long s) { return table_[static_cast<std::size_t>(m) * width_ + s]; }

  const CoverageProfile& p_;
  long width_;
  std::vector<Count> table_;
};

}  // namespace

int PartMultiset::multiplicity(int k) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), k));
}

long PartMultiset::sum() const {
  long s = 0;
  for (int x : parts) s += x;
  return s;
}

Count PartMultiset::cost(const CoverageProfile& p) const {
  Count c = 0;
  for (int x : parts) c = add_checked(c, p.a.at(x));
  return c;
}

std::string PartMultiset::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ']';
  return os.str();
}

OptimaList enumerate_optima(const CoverageProfile& p, long target, std::size_t cap) {
  require_exact(p);
  require_feasible(p, target);
  const long residue = target - p.n;
  Knapsack dp(p, residue);
  OptimaList out;
  std::vector<int> cur{p.n};
  dp.enumerate(p.n, residue, cur, out.optima, cap, out.overflow);
  std::sort(out.optima.begin(), out.optima.end());
  return out;
}

IpSolution solve_ip(const CoverageProfile& p, long target, std::size_t cap) {
  require_exact(p);
  require_feasible(p, target);
  const long residue = target - p.n;
  Knapsack dp(p, residue);
  IpSolution sol;
  sol.n = p.n;
  sol.target = target;
  sol.value = add_checked(p.a[p.n], dp.at(p.n, residue));
  std::vector<int> cur{p.n};
  dp.enumerate(p.n, residue, cur, sol.optima, cap, sol.overflow);
  std::sort(sol.optima.begin(), sol.optima.end());
  return sol;
}

CovBounds cov_bounds(const CoverageProfile& p, long target) {
  require_exact(p);
  CovBounds b;
  b.c = ratio_min(p).c;
  const Rational cn = b.c * target;
  b.lower = cn.ceil();
  // The IP value is an integer <= a[n] + cN, so flooring stays an upper bound.
  b.upper = p.a[p.n] + cn.floor();
  return b;
}

Count closed_form_clique(int n, int t, long target) {
  if (n < 1 || target < n) throw ArgumentError("closed form needs 1 <= n <= N");
  if (t < 1 || t > n) throw ArgumentError("closed form needs 1 <= t <= n");
  const long q = target / n;
  const long r = target % n;
  return (q + 1) * binomial(n, t) - binomial(n - r, t);
}

ConvLemmaResult check_conv_lemma(int n, int k, int r, int m) {
  if (n < 1 || k < 0 || r < 0 || r >= n || m <= k) throw ArgumentError("conv lemma needs r < n and m > k");
  double space = 1;
  for (int i = 0; i < m; ++i) space *= n + 1;
  if (space > 5e6) throw SizeError("conv lemma instance too large for brute force");

  const long total = static_cast<long>(k) * n + r;
  ConvLemmaResult res;
  res.value = -1;
  std::vector<std::vector<int>> maximizers;
  std::vector<int> x(m, 0);
  auto rec = [&](auto&& self, int i, long left, Count acc) -> void {
    if (i == m) {
      if (left != 0) return;
      std::vector<int> sorted(x);
      std::sort(sorted.rbegin(), sorted.rend());
      if (acc > res.value) {
        res.value = acc;
        maximizers.assign(1, sorted);
      } else if (acc == res.value) {
        maximizers.push_back(sorted);
      }
      return;
    }
    if (left > static_cast<long>(m - i) * n) return;
    for (int v = 0; v <= n && v <= left; ++v) {
      x[i] = v;
      self(self, i + 1, left - v, acc + binomial(v, 2));
    }
    x[i] = 0;
  };
  rec(rec, 0, total, 0);
  if (maximizers.empty()) throw ArgumentError("no feasible assignment");
  res.maximizer = maximizers.front();
  res.unique = std::all_of(maximizers.begin(), maximizers.end(),
                           [&](const std::vector<int>& v) { return v == res.maximizer; });
  std::vector<int> pattern(m, 0);
  for (int i = 0; i < k; ++i) pattern[i] = n;
  pattern[k] = r;
  std::sort(pattern.rbegin(), pattern.rend());
  res.matches_pattern = res.unique && res.maximizer == pattern;
  return res;
}

std::string format_solution(const IpSolution& s) {
  std::ostringstream os;
  os << "value=" << s.value << " optima=[";
  for (std::size_t i = 0; i < s.optima.size(); ++i) os << (i ? "," : "") << s.optima[i].str();
  os << ']';
  if (s.overflow) os << " (truncated)";
  return os.str();
}

}  // namespace hcover
