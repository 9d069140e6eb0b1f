#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcover {

inline constexpr int kMaxVertices = 62;

using Mask = std::uint64_t;

inline constexpr Mask bit(int v) { return Mask{1} << v; }
inline constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

// Error raised for argument values outside an operation's domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A set of vertices of some host graph, stored as a bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  static VertexSet of(std::span<const int> vertices);
  static constexpr VertexSet range(int n) { return VertexSet(low_bits(n)); }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

  std::vector<int> members() const;
  // Lexicographic order on the sorted member lists.
  bool lex_less(VertexSet o) const;
  // "{0,3,4}"
  std::string str() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  Mask bits_ = 0;
};

// Simple undirected graph on at most 62 vertices, one adjacency mask per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  Mask neighbors(int v) const { return adj_[v]; }
  std::span<const Mask> rows() const { return adj_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const { return std::popcount(adj_[v]); }
  int min_degree() const;
  int max_degree() const;
  long edge_count() const;
  std::vector<int> degree_sequence() const;  // non-decreasing
  std::vector<std::pair<int, int>> edges() const;  // (u, v), u < v, lexicographic

  // Subgraph induced on `s`, relabelled 0..|s|-1 in increasing vertex order.
  Graph induced(VertexSet s) const;
  // Result has an edge {perm[u], perm[v]} for every edge {u, v}.
  Graph relabelled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Mask> adj_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph edgeless_graph(int n);

// Block-diagonal union, labels shifted in list order.
Graph disjoint_union(std::span<const Graph> parts);

// Vertex i adjacent to i +- j (mod m) for each jump j, 1 <= j <= m/2.
Graph circulant(int m, std::span<const int> jumps);

// G(n, p). Pairs (u, v), u < v, are visited in lexicographic order and each
// consumes one draw of std::mt19937_64(seed); the top 53 bits form a uniform
// u in [0, 1) and the pair is an edge iff u < p.
Graph random_gnp(int n, double p, std::uint64_t seed);

}  // namespace hcover
