#include "hcover/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace hcover {

namespace {

void check_profile_matches(const Graph& h, int t, const CoverageProfile& p) {
  if (p.n != h.order() || p.t != t) throw ArgumentError("profile does not belong to (h, t)");
  if (!p.exact) throw ArgumentError("construction needs an exact profile");
}

int lowest_min_degree_vertex(const Graph& h) {
  const int d = h.min_degree();
  for (int v = 0; v < h.order(); ++v)
    if (h.degree(v) == d) return v;
  return -1;
}

void check_parts(const Graph& h, int target, std::span<const int> parts) {
  const int n = h.order();
  long sum = 0;
  for (int b : parts) {
    if (b < n || b >= 2 * n)
      throw ArgumentError("elementary part " + std::to_string(b) + " outside [n, 2n) = [" + std::to_string(n) +
                          ", " + std::to_string(2 * n) + ")");
    sum += b;
  }
  if (parts.empty() || sum != target) throw ArgumentError("elementary parts must sum to N");
  if (target > kMaxVertices) throw ArgumentError("construction exceeds the vertex limit");
}

}  // namespace

Graph build_L(const Graph& h, int t, int r, const CoverageProfile& p) {
  check_profile_matches(h, t, p);
  const int n = h.order();
  if (r < 0 || r >= n) throw ArgumentError("remainder r must satisfy 0 <= r < n");
  if (n + r > kMaxVertices) throw ArgumentError("construction exceeds the vertex limit");
  const VertexSet shared = p.witness_e[n - r];

  std::vector<int> image(n);
  int next = n;
  for (int v = 0; v < n; ++v) image[v] = shared.contains(v) ? v : next++;

  Graph g(n + r);
  for (auto [u, v] : h.edges()) {
    g.add_edge(u, v);
    g.add_edge(image[u], image[v]);
  }
  return g;
}

Graph build_M(const Graph& h, int target) {
  const int n = h.order();
  if (target < n || target >= 2 * n) throw ArgumentError("build_M needs n <= N < 2n");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const int m = lowest_min_degree_vertex(h);
  std::swap(perm[m], perm[n - 1]);
  const Graph base = h.relabelled(perm);

  Graph g(target);
  for (auto [u, v] : base.edges()) g.add_edge(u, v);
  for (int c = n; c < target; ++c)
    for (Mask nb = base.neighbors(n - 1); nb; nb &= nb - 1) g.add_edge(c, std::countr_zero(nb));
  return g;
}

Graph build_ideal_extremal(const Graph& h, int t, int target, const CoverageProfile& p) {
  check_profile_matches(h, t, p);
  const int n = h.order();
  if (target < n) throw ArgumentError("no H-covered graph exists on fewer than n vertices");
  if (target > kMaxVertices) throw ArgumentError("construction exceeds the vertex limit");
  const int q = target / n, r = target % n;
  std::vector<Graph> parts(q - 1, h);
  parts.push_back(build_L(h, t, r, p));
  return disjoint_union(parts);
}

Graph build_elementary_extremal(const Graph& h, int target, std::span<const int> parts) {
  check_parts(h, target, parts);
  std::vector<Graph> pieces;
  for (int b : parts) pieces.push_back(build_M(h, b));
  return disjoint_union(pieces);
}

namespace {

// Parts in realization order: the reserved n first, then the rest as given.
std::vector<int> realization_order(const Graph& h, std::span<const int> parts) {
  const int n = h.order();
  std::vector<int> order(parts.begin(), parts.end());
  const auto whole = std::find(order.begin(), order.end(), n);
  if (whole == order.end()) throw ArgumentError("realization needs at least one part equal to n");
  long sum = 0;
  for (int k : order) {
    if (k < 1 || k > n) throw ArgumentError("realization parts must lie in [1, n]");
    sum += k;
  }
  if (sum > kMaxVertices) throw ArgumentError("construction exceeds the vertex limit");
  std::rotate(order.begin(), whole, whole + 1);
  return order;
}

}  // namespace

Graph build_realization(const Graph& h, int t, std::span<const int> parts, const CoverageProfile& p) {
  check_profile_matches(h, t, p);
  const int n = h.order();
  const std::vector<int> order = realization_order(h, parts);
  int total = 0;
  for (int k : order) total += k;
  Graph g(total);
  for (auto [u, v] : h.edges()) g.add_edge(u, v);
  int next = n;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const int k = order[i];
    const VertexSet shared = k == n ? VertexSet() : p.witness_e[n - k];
    std::vector<int> image(n);
    for (int v = 0; v < n; ++v) image[v] = shared.contains(v) ? v : next++;
    for (auto [u, v] : h.edges()) g.add_edge(image[u], image[v]);
  }
  return g;
}

CoverAssignment realization_cover(const Graph& h, std::span<const int> parts, const CoverageProfile& p) {
  const int n = h.order();
  const std::vector<int> order = realization_order(h, parts);
  CoverAssignment c;
  for (int v = 0; v < n; ++v) c.sets.push_back(VertexSet(low_bits(n)));
  int next = n;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const int k = order[i];
    const Mask shared = k == n ? 0 : p.witness_e[n - k].bits();
    const VertexSet s(shared | (low_bits(k) << next));
    for (int j = 0; j < k; ++j) c.sets.push_back(s);
    next += k;
  }
  return c;
}

Graph build_tightness(int l, int d) {
  if (d % 2 != 0) throw ArgumentError("tightness degree d must be even");
  if (d < 2 || d >= l) throw ArgumentError("tightness degree needs 2 <= d < l");
  std::vector<int> jumps(d / 2);
  std::iota(jumps.begin(), jumps.end(), 1);
  const Graph parts[] = {circulant(l, jumps), circulant(l + 1, jumps)};
  return disjoint_union(parts);
}

Graph build_pendant_clique(int n, int target) {
  if (target <= n) throw ArgumentError("pendant construction needs N > n");
  Graph g(target);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  for (int v = n; v < target; ++v) g.add_edge(0, v);
  return g;
}

CoverAssignment ideal_extremal_cover(const Graph& h, int target, const CoverageProfile& p) {
  const int n = h.order();
  const int q = target / n, r = target % n;
  CoverAssignment c;
  c.sets.reserve(target);
  for (int block = 0; block < q; ++block) {
    const VertexSet s(low_bits(n) << (block * n));
    for (int i = 0; i < n; ++i) c.sets.push_back(s);
  }
  const int base = (q - 1) * n;
  const Mask shared = p.witness_e[n - r].bits() << base;
  const VertexSet second(shared | (low_bits(r) << (base + n)));
  for (int i = 0; i < r; ++i) c.sets.push_back(second);
  return c;
}

CoverAssignment elementary_extremal_cover(const Graph& h, std::span<const int> parts) {
  const int n = h.order();
  CoverAssignment c;
  int base = 0;
  for (int b : parts) {
    const Mask core = low_bits(n - 1) << base;
    for (int i = 0; i < b; ++i) {
      c.sets.push_back(VertexSet(core | bit(base + std::max(i, n - 1))));
    }
    base += b;
  }
  return c;
}

}  // namespace hcover
