#include "hcover/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hcover {

VertexSet VertexSet::of(std::span<const int> vertices) {
  Mask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw ArgumentError("vertex out of range: " + std::to_string(v));
    m |= bit(v);
  }
  return VertexSet(m);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

bool VertexSet::lex_less(VertexSet o) const {
  Mask a = bits_, b = o.bits_;
  while (a && b) {
    int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

std::string VertexSet::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw ArgumentError("graph order must be in [0, " + std::to_string(kMaxVertices) + "], got " +
                        std::to_string(n));
  adj_.assign(n, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ArgumentError("loops are not allowed");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

long Graph::edge_count() const {
  long s = 0;
  for (Mask m : adj_) s += std::popcount(m);
  return s / 2;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (Mask m = adj_[u] & ~low_bits(u + 1); m; m &= m - 1) out.emplace_back(u, std::countr_zero(m));
  return out;
}

Graph Graph::induced(VertexSet s) const {
  const auto vs = s.members();
  Graph g(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (has_edge(vs[i], vs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph Graph::relabelled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw ArgumentError("permutation size mismatch");
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw ArgumentError("disjoint union of no graphs is undefined");
  int total = 0;
  for (const auto& p : parts) total += p.order();
  if (total > kMaxVertices)
    throw ArgumentError("disjoint union has " + std::to_string(total) + " vertices, limit is " +
                        std::to_string(kMaxVertices));
  Graph g(total);
  int offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) g.add_edge(u + offset, v + offset);
    offset += p.order();
  }
  return g;
}

Graph circulant(int m, std::span<const int> jumps) {
  Graph g(m);
  for (int j : jumps) {
    if (j < 1 || 2 * j > m)
      throw ArgumentError("circulant jump " + std::to_string(j) + " outside [1, " + std::to_string(m / 2) + "]");
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + j) % m);
  }
  return g;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("edge probability must lie in [0, 1]");
  Graph g(n);
  std::mt19937_64 rng(seed);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * kScale;
      if (x < p) g.add_edge(u, v);
    }
  return g;
}

}  // namespace hcover
