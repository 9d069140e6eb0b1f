#include "hcover/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "hcover/canonical.hpp"
#include "hcover/embedding.hpp"
#include "hcover/graph_io.hpp"
#include "hcover/ip.hpp"

namespace hcover {

namespace {

// Family enumeration tries all n! placements of the second copy.
constexpr int kMaxFamilyOrder = 8;

struct Level {
  std::vector<Graph> graphs;
  std::vector<Count> counts;
};

struct SearchOutcome {
  Count best = -1;
  std::vector<std::string> extremal;
  bool blown = false;
};

class LevelSearch {
 public:
  LevelSearch(const Graph& h, int t, int N, std::uint64_t max_nodes, std::uint64_t& nodes)
      : h_(h), t_(t), N_(N), max_nodes_(max_nodes), nodes_(nodes), dmin_(h.min_degree()) {}

  // All N-vertex graphs with at most `limit` copies of K_t, one per isomorphism class.
  SearchOutcome run(Count limit) {
    SearchOutcome out;
    Level level;
    level.graphs.emplace_back(N_);
    level.counts.push_back(t_ == 1 ? N_ : 0);
    if (level.counts[0] > limit) return out;
    while (!level.graphs.empty()) {
      for (std::size_t i = 0; i < level.graphs.size(); ++i) consider(level.graphs[i], level.counts[i], out);
      Level next;
      std::unordered_set<std::string> seen;
      for (std::size_t i = 0; i < level.graphs.size(); ++i) {
        const Graph& g = level.graphs[i];
        for (int u = 0; u < N_; ++u)
          for (Mask m = ~g.neighbors(u) & low_bits(N_) & ~low_bits(u + 1); m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (++nodes_ > max_nodes_) {
              out.blown = true;
              return out;
            }
            const Count c = level.counts[i] +
                            (t_ >= 2 ? count_cliques_in(g, g.neighbors(u) & g.neighbors(v), t_ - 2) : 0);
            if (c > limit) continue;
            Graph child = g;
            child.add_edge(u, v);
            if (!seen.insert(canonical_key(child)).second) continue;
            next.graphs.push_back(std::move(child));
            next.counts.push_back(c);
          }
      }
      level = std::move(next);
    }
    std::sort(out.extremal.begin(), out.extremal.end());
    return out;
  }

 private:
  void consider(const Graph& g, Count c, SearchOutcome& out) const {
    if (out.best >= 0 && c > out.best) return;
    if (g.min_degree() < dmin_) return;
    if (!is_covered(g, h_).covered) return;
    if (out.best < 0 || c < out.best) {
      out.best = c;
      out.extremal.clear();
    }
    out.extremal.push_back(canonical_key(g));
  }

  const Graph& h_;
  int t_;
  int N_;
  std::uint64_t max_nodes_;
  std::uint64_t& nodes_;
  int dmin_;
};

void check_family_order(const Graph& h) {
  if (h.order() > kMaxFamilyOrder)
    throw SizeError("family enumeration limited to graphs on at most " + std::to_string(kMaxFamilyOrder) +
                    " vertices");
}

std::vector<std::string> sorted_unique(std::set<std::string> s) { return {s.begin(), s.end()}; }

std::vector<Graph> parse_all(const std::vector<std::string>& keys) {
  std::vector<Graph> out;
  for (const auto& k : keys) out.push_back(parse_graph6(k));
  return out;
}

}  // namespace

CoverCheck is_covered(const Graph& g, const Graph& h) {
  CoverCheck out;
  CoverAssignment cover;
  for (int v = 0; v < g.order(); ++v) {
    const auto phi = find_copy_at(g, h, v);
    if (!phi) {
      out.uncovered = v;
      return out;
    }
    cover.sets.push_back(VertexSet::of(*phi));
  }
  out.covered = true;
  out.cover = std::move(cover);
  return out;
}

OracleResult min_cover_exhaustive(const Graph& h, int t, int N, const OracleBudget& budget) {
  if (t < 1) throw ArgumentError("clique order must be at least 1");
  if (N < h.order())
    throw InfeasibleError("N = " + std::to_string(N) + " < n = " + std::to_string(h.order()) +
                          ": no H-covered graph exists on fewer than n vertices");
  if (N > budget.max_order)
    throw SizeError("oracle refuses N = " + std::to_string(N) + " above the cap " + std::to_string(budget.max_order));

  OracleResult res;
  res.N = N;
  res.t = t;
  if (h.order() == 0) {
    res.min_count = count_cliques(Graph(N), t);
    res.extremal = {canonical_key(Graph(N))};
    res.complete = true;
    return res;
  }
  const CoverageProfile p = profile_exact(h, t);
  res.start_level = solve_ip(p, N, 1).value;
  const Count top = binomial(N, t);

  LevelSearch search(h, t, N, budget.max_nodes, res.nodes_explored);
  for (Count limit = res.start_level;; ++limit) {
    SearchOutcome out = search.run(limit);
    if (out.blown) {
      res.min_count = out.best;
      res.extremal = std::move(out.extremal);
      std::sort(res.extremal.begin(), res.extremal.end());
      return res;
    }
    if (out.best >= 0) {
      res.min_count = out.best;
      res.extremal = std::move(out.extremal);
      res.complete = true;
      return res;
    }
    if (limit >= top) break;
  }
  // K_N contains every graph on at most N vertices, so this is unreachable.
  res.complete = true;
  return res;
}

Count peel_bound(const Graph& g, const Graph& h, int t, const CoverAssignment& cover, const CoverageProfile& p,
                 const std::vector<int>& order) {
  validate_cover(g, h, cover);
  if (!p.exact || p.n != h.order() || p.t != t) throw ContractError("profile does not belong to (h, t)");
  std::vector<int> seq = order;
  if (seq.empty() && g.order() > 0) {
    seq.resize(g.order());
    std::iota(seq.begin(), seq.end(), 0);
  }
  if (static_cast<int>(seq.size()) != g.order()) throw ContractError("peel order is not a permutation of V(g)");
  Mask seen = 0;
  for (int v : seq) {
    if (v < 0 || v >= g.order() || (seen & bit(v))) throw ContractError("peel order is not a permutation of V(g)");
    seen |= bit(v);
  }

  Mask left = g.vertices().bits();
  Count bound = 0;
  for (int v : seq) {
    if (!(left & bit(v))) continue;
    const Mask s = cover.sets[v].bits();
    bound += p.a[std::popcount(left & s)];
    left &= ~s;
  }
  return bound;
}

std::vector<std::string> l_family(const Graph& h, int t, int r, const CoverageProfile& p) {
  const int n = h.order();
  if (r < 0 || r >= n) throw ArgumentError("remainder r must satisfy 0 <= r < n");
  if (!p.exact || p.n != n || p.t != t) throw ArgumentError("profile does not belong to (h, t)");
  check_family_order(h);
  if (r == 0) return {canonical_key(h)};

  const Mask all = low_bits(n);
  std::set<std::string> keys;
  std::set<std::vector<Mask>> rows_seen;
  std::vector<int> perm(n);
  for (Mask shared = 0;; shared = (shared - all) & all) {
    // (shared - all) & all steps through every subset of V(h)
    if (std::popcount(shared) == n - r && count_cliques_in(h, shared, t) == p.e[n - r]) {
      std::vector<int> slots;
      for (Mask m = shared; m; m &= m - 1) slots.push_back(std::countr_zero(m));
      for (int i = 0; i < r; ++i) slots.push_back(n + i);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool fits = true;
        for (int u = 0; u < n && fits; ++u)
          for (int v = u + 1; v < n && fits; ++v) {
            const int x = slots[perm[u]], y = slots[perm[v]];
            if (x < n && y < n && h.has_edge(u, v) != h.has_edge(x, y)) fits = false;
          }
        if (!fits) continue;
        Graph g(n + r);
        for (auto [u, v] : h.edges()) g.add_edge(u, v);
        for (auto [u, v] : h.edges()) {
          const int x = slots[perm[u]], y = slots[perm[v]];
          if (x >= n || y >= n) g.add_edge(x, y);
        }
        if (rows_seen.emplace(g.rows().begin(), g.rows().end()).second) keys.insert(canonical_key(g));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (shared == all) break;
  }
  return sorted_unique(std::move(keys));
}

std::vector<std::string> m_family(const Graph& h, int b) {
  const int n = h.order();
  if (b < n || b >= 2 * n) throw ArgumentError("M family needs n <= b < 2n");
  check_family_order(h);
  if (b == n) return {canonical_key(h)};

  const int d = h.min_degree();
  const int extras = b - n + 1;
  std::set<std::string> keys;
  for (int w = 0; w < n; ++w) {
    if (h.degree(w) != d) continue;
    const Graph core = h.induced(h.vertices().without(w));
    std::vector<Mask> nbhds;
    for (Mask s = 0; s < low_bits(n - 1) + 1; ++s) {
      if (std::popcount(s) != d) continue;
      Graph cand(n);
      for (auto [u, v] : core.edges()) cand.add_edge(u, v);
      for (Mask m = s; m; m &= m - 1) cand.add_edge(n - 1, std::countr_zero(m));
      if (are_isomorphic(cand, h)) nbhds.push_back(s);
    }
    // multisets of `extras` neighbourhoods, as non-decreasing index sequences
    std::vector<std::size_t> pick(extras, 0);
    while (true) {
      Graph g(b);
      for (auto [u, v] : core.edges()) g.add_edge(u, v);
      for (int i = 0; i < extras; ++i)
        for (Mask m = nbhds[pick[i]]; m; m &= m - 1) g.add_edge(n - 1 + i, std::countr_zero(m));
      keys.insert(canonical_key(g));
      int i = extras - 1;
      while (i >= 0 && pick[i] + 1 == nbhds.size()) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < extras; ++j) pick[j] = pick[i];
    }
  }
  return sorted_unique(std::move(keys));
}

bool UniquenessReport::ideal_exact() const { return oracle.complete && oracle.extremal == ideal_family; }

bool UniquenessReport::elementary_exact() const {
  return oracle.complete && oracle.extremal == elementary_family;
}

UniquenessReport uniqueness_check(const Graph& h, int t, int N, const OracleBudget& budget) {
  UniquenessReport rep;
  rep.oracle = min_cover_exhaustive(h, t, N, budget);
  const int n = h.order();
  const int q = N / n, r = N % n;
  const CoverageProfile p = profile_exact(h, t);

  std::set<std::string> ideal;
  for (const Graph& l : parse_all(l_family(h, t, r, p))) {
    std::vector<Graph> parts(q - 1, h);
    parts.push_back(l);
    ideal.insert(canonical_key(disjoint_union(parts)));
  }
  rep.ideal_family = sorted_unique(std::move(ideal));

  // q parts b_1 <= ... <= b_q in [n, 2n) summing to N, each filled by any M_b member
  std::set<std::string> elementary;
  std::vector<int> sizes;
  std::vector<Graph> chosen;
  auto fill = [&](auto&& self, std::size_t i) -> void {
    if (i == sizes.size()) {
      elementary.insert(canonical_key(disjoint_union(chosen)));
      return;
    }
    for (const Graph& m : parse_all(m_family(h, sizes[i]))) {
      chosen.push_back(m);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  auto split = [&](auto&& self, int left, int parts, int lo) -> void {
    if (parts == 0) {
      if (left == 0) fill(fill, 0);
      return;
    }
    for (int b = lo; b < 2 * n && b <= left; ++b) {
      sizes.push_back(b);
      self(self, left - b, parts - 1, b);
      sizes.pop_back();
    }
  };
  split(split, N, q, n);
  rep.elementary_family = sorted_unique(std::move(elementary));

  const std::set<std::string> ext(rep.oracle.extremal.begin(), rep.oracle.extremal.end());
  const std::set<std::string> in_ideal(rep.ideal_family.begin(), rep.ideal_family.end());
  const std::set<std::string> in_elem(rep.elementary_family.begin(), rep.elementary_family.end());
  for (const auto& g : rep.oracle.extremal) {
    if (in_ideal.count(g)) rep.extremal_ideal.push_back(g);
    if (in_elem.count(g)) rep.extremal_elementary.push_back(g);
    if (!in_ideal.count(g) && !in_elem.count(g)) rep.outside.push_back(g);
  }
  std::set<std::string> members(in_ideal);
  members.insert(in_elem.begin(), in_elem.end());
  for (const auto& g : members)
    if (!ext.count(g)) rep.non_extremal.push_back(g);
  return rep;
}

}  // namespace hcover
