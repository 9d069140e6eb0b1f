#include "hcover/profile.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace hcover {

namespace {

// Subtrees with fewer undecided vertices are enumerated without bounding.
constexpr int kBoundMinRemaining = 6;
// Undecided vertices split off per worker when sweeping in parallel.
constexpr int kMaxSplitBits = 6;

struct SweepResult {
  std::vector<Count> best;
  std::vector<VertexSet> witness;
};

class DensitySweep {
 public:
  DensitySweep(const Graph& h, int t) : h_(h), t_(t), n_(h.order()) {
    result_.best.assign(n_ + 1, -1);
    result_.witness.assign(n_ + 1, VertexSet());
  }

  // Sweeps every set whose intersection with {0..start-1} is exactly `prefix`.
  SweepResult run(int start, Mask prefix) {
    const Count c = count_cliques_in(h_, prefix, t_);
    record(std::popcount(prefix), c, prefix);
    dfs(start, prefix, std::popcount(prefix), c);
    return std::move(result_);
  }

 private:
  void record(int k, Count c, Mask s) {
    if (c > result_.best[k]) {
      result_.best[k] = c;
      result_.witness[k] = VertexSet(s);
    }
  }

  // Optimistic completion: every new clique contains an added vertex u and
  // lies in N[u] within S u R, so the gain of j added vertices is at most the
  // j largest per-vertex clique degrees (halved edge budget for t = 2).
  bool can_improve(int i, Mask s, int size, Count c) const {
    const Mask rest = h_.vertices().bits() & ~low_bits(i);
    const int r = n_ - i;
    gains_.clear();
    for (Mask m = rest; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      if (t_ == 2) {
        gains_.push_back(2 * std::popcount(h_.neighbors(u) & s) + std::popcount(h_.neighbors(u) & rest));
      } else {
        gains_.push_back(count_cliques_in(h_, h_.neighbors(u) & (s | rest), t_ - 1));
      }
    }
    std::sort(gains_.begin(), gains_.end(), std::greater<>());
    Count prefix_sum = 0;
    for (int j = 1; j <= r; ++j) {
      prefix_sum += gains_[j - 1];
      const Count gain = t_ == 2 ? prefix_sum / 2 : prefix_sum;
      const Count ub = std::min(c + gain, binomial(size + j, t_));
      if (ub > result_.best[size + j]) return true;
    }
    return false;
  }

  void dfs(int i, Mask s, int size, Count c) {
    if (i == n_) return;
    if (n_ - i >= kBoundMinRemaining && !can_improve(i, s, size, c)) return;
    const Mask with = s | bit(i);
    const Count c2 = c + count_cliques_in(h_, h_.neighbors(i) & s, t_ - 1);
    record(size + 1, c2, with);
    dfs(i + 1, with, size + 1, c2);
    dfs(i + 1, s, size, c);
  }

  const Graph& h_;
  int t_;
  int n_;
  SweepResult result_;
  mutable std::vector<Count> gains_;
};

void merge_into(SweepResult& acc, const SweepResult& part) {
  for (std::size_t k = 0; k < acc.best.size(); ++k) {
    if (part.best[k] > acc.best[k] ||
        (part.best[k] == acc.best[k] && part.best[k] >= 0 && part.witness[k].lex_less(acc.witness[k]))) {
      acc.best[k] = part.best[k];
      acc.witness[k] = part.witness[k];
    }
  }
}

SweepResult sweep(const Graph& h, int t, int threads) {
  const int n = h.order();
  if (threads <= 1 || n < 2 * kMaxSplitBits) return DensitySweep(h, t).run(0, 0);

  int bits = 0;
  while (bits < kMaxSplitBits && (1 << bits) < 4 * threads) ++bits;
  const int tasks = 1 << bits;
  std::vector<SweepResult> parts(tasks);
  std::vector<std::thread> pool;
  std::atomic_int next{0};
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (int id; (id = next.fetch_add(1)) < tasks;) parts[id] = DensitySweep(h, t).run(bits, static_cast<Mask>(id));
    });
  }
  for (auto& th : pool) th.join();
  SweepResult acc = parts[0];
  for (int id = 1; id < tasks; ++id) merge_into(acc, parts[id]);
  return acc;
}

void check_order(int t) {
  if (t < 1) throw ArgumentError("clique order must be at least 1");
}

void derive_coverage(CoverageProfile& p) {
  const Mask all = low_bits(p.n);
  p.a.assign(p.n + 1, 0);
  p.witness_a.assign(p.n + 1, VertexSet());
  for (int k = 0; k <= p.n; ++k) {
    p.a[k] = p.total - p.e[p.n - k];
    p.witness_a[k] = VertexSet(all & ~p.witness_e[p.n - k].bits());
  }
}

}  // namespace

int default_exact_max(int t) { return t == 2 ? 24 : 20; }

int env_threads() {
  if (const char* s = std::getenv("HCOVER_THREADS")) {
    const int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return 1;
}

Count a_of_set(const Graph& h, int t, VertexSet set) {
  check_order(t);
  const Mask all = h.vertices().bits();
  if (set.bits() & ~all) throw ArgumentError("vertex set exceeds the host graph");
  return count_cliques_in(h, all, t) - count_cliques_in(h, all & ~set.bits(), t);
}

CoverageProfile profile_exact(const Graph& h, int t, const ProfileOptions& options) {
  check_order(t);
  const int limit = options.exact_max > 0 ? options.exact_max : default_exact_max(t);
  if (h.order() > limit)
    throw SizeError("exact profile limited to " + std::to_string(limit) + " vertices for t = " + std::to_string(t) +
                    " (graph has " + std::to_string(h.order()) + "); raise the limit or use profile_heuristic");
  const int threads = options.threads > 0 ? options.threads : env_threads();

  CoverageProfile p;
  p.n = h.order();
  p.t = t;
  p.total = count_cliques(h, t);
  p.exact = true;
  SweepResult r = sweep(h, t, threads);
  p.e = std::move(r.best);
  p.witness_e = std::move(r.witness);
  derive_coverage(p);
  return p;
}

CoverageProfile profile_heuristic(const Graph& h, int t, int effort, std::uint64_t seed) {
  check_order(t);
  const int n = h.order();
  const Mask all = h.vertices().bits();
  CoverageProfile p;
  p.n = n;
  p.t = t;
  p.total = count_cliques(h, t);
  p.exact = false;
  p.e.assign(n + 1, -1);
  p.witness_e.assign(n + 1, VertexSet());

  auto offer = [&](Mask s) {
    const int k = std::popcount(s);
    const Count c = count_cliques_in(h, s, t);
    if (c > p.e[k] || (c == p.e[k] && VertexSet(s).lex_less(p.witness_e[k]))) {
      p.e[k] = c;
      p.witness_e[k] = VertexSet(s);
    }
  };
  auto gain = [&](int u, Mask s) { return count_cliques_in(h, h.neighbors(u) & s, t - 1); };

  // Greedy densest extension from the empty set.
  Mask s = 0;
  offer(s);
  for (int k = 1; k <= n; ++k) {
    int best = -1;
    Count bg = -1;
    for (Mask m = all & ~s; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      if (const Count g = gain(u, s); g > bg) {
        bg = g;
        best = u;
      }
    }
    s |= bit(best);
    offer(s);
  }
  // Greedy peeling from the full set.
  s = all;
  for (int k = n; k > 0; --k) {
    int worst = -1;
    Count wg = 0;
    for (Mask m = s; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      if (const Count g = gain(u, s); worst < 0 || g < wg) {
        wg = g;
        worst = u;
      }
    }
    s &= ~bit(worst);
    offer(s);
  }

  // Swap local search from the greedy sets and from random starts.
  std::mt19937_64 rng(seed);
  auto local_search = [&](Mask cur) {
    for (bool improved = true; improved;) {
      improved = false;
      for (Mask in = cur; in && !improved; in &= in - 1) {
        const int u = std::countr_zero(in);
        const Mask rest = cur & ~bit(u);
        const Count lose = gain(u, rest);
        for (Mask out = all & ~cur; out; out &= out - 1) {
          const int w = std::countr_zero(out);
          if (gain(w, rest) > lose) {
            cur = rest | bit(w);
            improved = true;
            break;
          }
        }
      }
    }
    offer(cur);
  };
  for (int k = 1; k < n; ++k) {
    local_search(p.witness_e[k].bits());
    for (int restart = 0; restart < effort; ++restart) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
      Mask start = 0;
      for (int i = 0; i < k; ++i) start |= bit(perm[i]);
      local_search(start);
    }
  }

  // e is non-decreasing: extend the witness of k by its lowest absent vertex.
  for (int k = 0; k < n; ++k) {
    if (p.e[k + 1] < p.e[k]) {
      const Mask w = p.witness_e[k].bits();
      const Mask ext = w | bit(std::countr_zero(all & ~w));
      p.e[k + 1] = count_cliques_in(h, ext, t);
      p.witness_e[k + 1] = VertexSet(ext);
    }
  }
  derive_coverage(p);
  return p;
}

RatioMin ratio_min(const CoverageProfile& p) {
  if (p.n < 1) throw ArgumentError("profile of an empty graph");
  RatioMin out{Rational(p.a[1], 1), {1}};
  for (int k = 2; k <= p.n; ++k) {
    const Rational r(p.a[k], k);
    if (r < out.c) {
      out.c = r;
      out.argmin = {k};
    } else if (r == out.c) {
      out.argmin.push_back(k);
    }
  }
  return out;
}

namespace {

void fail(PredicateCheck& c, int k, int l) {
  c.holds = false;
  if (c.failures.size() < kMaxReportedFailures) c.failures.emplace_back(k, l);
}

}  // namespace

PredicateReport check_profile_predicates(const CoverageProfile& p, const Graph& h) {
  if (p.t != 2) throw ArgumentError("profile predicates are stated for edges (t = 2)");
  if (!p.exact) throw ArgumentError("profile predicates need an exact profile");
  const int n = p.n;
  const auto& a = p.a;
  const auto& e = p.e;
  PredicateReport r;

  if (h.min_degree() == h.max_degree()) {
    r.regular_degree = h.min_degree();
    r.regular_identity.applies = true;
    for (int k = 0; k <= n; ++k)
      if (a[k] + e[k] != static_cast<Count>(r.regular_degree) * k) fail(r.regular_identity, k, 0);
  }

  r.half_degree_bound.applies = 2 * h.min_degree() >= n - 1;
  if (r.half_degree_bound.applies)
    for (int k = 0; k <= n; ++k)
      if (2 * a[k] < static_cast<Count>(k) * (n - k)) fail(r.half_degree_bound, k, 0);

  r.e_superadditive.applies = true;
  for (int k = 1; k <= n; ++k)
    for (int l = k; k + l <= n; ++l)
      if (e[k] + e[l] >= e[k + l]) fail(r.e_superadditive, k, l);

  r.a_exchange.applies = true;
  for (int k = 1; k < n; ++k)
    for (int l = std::max(k, n - k); l < n; ++l)
      if (a[k] + a[l] <= a[n] + a[k + l - n]) fail(r.a_exchange, k, l);
  return r;
}

std::string profile_table(const CoverageProfile& p) {
  std::ostringstream os;
  for (int k = 0; k <= p.n; ++k)
    os << k << ' ' << p.a[k] << ' ' << p.e[k] << ' ' << p.witness_a[k].str() << ' ' << p.witness_e[k].str() << '\n';
  return os.str();
}

}  // namespace hcover
