#include "hcover/graph_io.hpp"

#include <algorithm>
#include <sstream>

namespace hcover {

namespace {

constexpr int kBias = 63;

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) throw ParseError("byte outside the graph6 range 63..126", i);
  }
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n > kMaxVertices)
    throw ParseError("graphs above " + std::to_string(kMaxVertices) + " vertices are not supported", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected)
    throw ParseError("length " + std::to_string(text.size()) + " does not match " + std::to_string(n) +
                         " vertices (expected " + std::to_string(expected) + ")",
                     std::min(text.size(), expected));
  if (n == 0) throw ParseError("graph has no vertices", 0);

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  for (; k % 6 != 0; ++k) {
    const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
    if ((chunk >> (5 - k % 6)) & 1) throw ParseError("non-zero padding bit", 1 + k / 6);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0, used = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n = -1, m = -1;
  if (!(in >> n >> m)) throw ParseError("edge list must start with \"n m\"", 0);
  if (n < 1 || n > kMaxVertices) throw ParseError("vertex count out of range", 0);
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError("edge count out of range", 0);
  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    long u = -1, v = -1;
    const auto at = static_cast<std::size_t>(std::max<std::streamoff>(0, in.tellg()));
    if (!(in >> u >> v)) throw ParseError("expected " + std::to_string(m) + " edges", at);
    if (u < 0 || v >= n || u >= v) throw ParseError("invalid edge (need 0 <= u < v < n)", at);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) throw ParseError("duplicate edge", at);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing data after edge list", static_cast<std::size_t>(in.tellg()));
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto es = g.edges();
  os << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace hcover
