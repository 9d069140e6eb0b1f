#include "hcover/cover.hpp"

#include <string>
#include <unordered_set>

#include "hcover/embedding.hpp"

namespace hcover {

void validate_cover(const Graph& g, const Graph& h, const CoverAssignment& cover) {
  if (static_cast<int>(cover.sets.size()) != g.order())
    throw ContractError("cover assigns " + std::to_string(cover.sets.size()) + " sets for " +
                        std::to_string(g.order()) + " vertices");
  std::unordered_set<Mask> verified;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet s = cover.sets[v];
    const std::string where = "cover set of vertex " + std::to_string(v);
    if (!s.contains(v)) throw ContractError(where + " does not contain it");
    if (s.size() != h.order()) throw ContractError(where + " has the wrong size");
    if (s.bits() & ~g.vertices().bits()) throw ContractError(where + " leaves the graph");
    if (verified.contains(s.bits())) continue;
    if (!find_embedding(g.induced(s), h, low_bits(h.order()), -1))
      throw ContractError(where + " does not carry a copy of H");
    verified.insert(s.bits());
  }
}

}  // namespace hcover
