#include "hcover/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "hcover/graph_io.hpp"

namespace hcover {

namespace {

using Coloring = std::vector<int>;

int count_colors(const Coloring& col) {
  return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

// Rank vertices by (colour, neighbour counts per colour) until stable.
// Colours stay ordered, so the result depends only on the input colouring.
Coloring refine(const Graph& g, Coloring col) {
  const int n = g.order();
  int k = count_colors(col);
  std::vector<std::vector<int>> sig(n);
  std::vector<int> order(n);
  for (;;) {
    for (int v = 0; v < n; ++v) {
      sig[v].assign(k + 1, 0);
      sig[v][0] = col[v];
      for (Mask m = g.neighbors(v); m; m &= m - 1) ++sig[v][1 + col[std::countr_zero(m)]];
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    Coloring next(n);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    const int nk = n == 0 ? 0 : rank + 1;
    col = std::move(next);
    if (nk == k) return col;
    k = nk;
  }
}

Coloring individualize(const Coloring& col, int v) {
  Coloring c(col.size());
  for (std::size_t x = 0; x < col.size(); ++x) c[x] = 2 * col[x] + (static_cast<int>(x) == v ? 0 : 1);
  std::vector<int> vals(c);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (auto& x : c) x = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
  return c;
}

bool are_twins(const Graph& g, int u, int w) {
  return (g.neighbors(u) & ~bit(w)) == (g.neighbors(w) & ~bit(u));
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Coloring start(n_, 0);
    std::vector<int> prefix;
    descend(refine(g_, start), prefix);
    CanonicalForm out;
    out.labeling = best_labeling_;
    out.graph = g_.relabelled(best_labeling_);
    return out;
  }

 private:
  using Certificate = std::vector<Mask>;

  Certificate certificate(const Coloring& lab) const {
    Certificate rows(n_, 0);
    for (int v = 0; v < n_; ++v) {
      Mask r = 0;
      for (Mask m = g_.neighbors(v); m; m &= m - 1) r |= bit(lab[std::countr_zero(m)]);
      rows[lab[v]] = r;
    }
    return rows;
  }

  // perm maps v -> u with lab_a[v] == lab_b[u].
  std::vector<int> automorphism(const Coloring& from, const Coloring& to) const {
    std::vector<int> inv(n_);
    for (int u = 0; u < n_; ++u) inv[to[u]] = u;
    std::vector<int> perm(n_);
    for (int v = 0; v < n_; ++v) perm[v] = inv[from[v]];
    return perm;
  }

  void leaf(const Coloring& lab) {
    Certificate cert = certificate(lab);
    if (!first_labeling_) {
      first_labeling_ = lab;
      first_cert_ = cert;
      best_labeling_ = lab;
      best_cert_ = std::move(cert);
      return;
    }
    if (cert == *first_cert_) {
      generators_.push_back(automorphism(lab, *first_labeling_));
    } else if (cert == best_cert_) {
      generators_.push_back(automorphism(lab, best_labeling_));
    } else if (cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_labeling_ = lab;
    }
  }

  // Union-find orbits of the generators that fix every vertex of `prefix`.
  std::vector<int> stabilizer_orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gen : generators_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gen[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void descend(const Coloring& col, std::vector<int>& prefix) {
    const int k = count_colors(col);
    if (k == n_) {
      leaf(col);
      return;
    }
    std::vector<int> size(k, 0);
    for (int c : col) ++size[c];
    int target = -1;
    for (int c = 0; c < k; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;

    std::vector<int> cell;
    for (int v = 0; v < n_; ++v)
      if (col[v] == target) cell.push_back(v);

    std::vector<int> explored;
    for (int v : cell) {
      bool skip = std::any_of(explored.begin(), explored.end(), [&](int u) { return are_twins(g_, u, v); });
      if (!skip && !explored.empty()) {
        const auto orbit = stabilizer_orbits(prefix);
        skip = std::any_of(explored.begin(), explored.end(), [&](int u) { return orbit[u] == orbit[v]; });
      }
      if (skip) continue;
      explored.push_back(v);
      prefix.push_back(v);
      descend(refine(g_, individualize(col, v)), prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  std::optional<Coloring> first_labeling_;
  std::optional<Certificate> first_cert_;
  Coloring best_labeling_;
  Certificate best_cert_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return {g, {}};
  return Search(g).run();
}

std::string canonical_key(const Graph& g) {
  if (g.order() == 0) return {};
  return to_graph6(canonical_form(g).graph);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace hcover
