#pragma once

#include <optional>
#include <vector>

#include "hcover/graph.hpp"

namespace hcover {

// Injective map phi: V(h) -> V(g) sending every edge of h to an edge of g
// (a subgraph copy, not necessarily induced). With anchor >= 0 the image must
// contain the anchor. Only vertices in `allowed` are used.
std::optional<std::vector<int>> find_embedding(const Graph& g, const Graph& h, Mask allowed, int anchor);

// find_embedding restricted to copies through v.
std::optional<std::vector<int>> find_copy_at(const Graph& g, const Graph& h, int v);

// True iff some copy of h in g contains v.
bool subgraph_copy_at(const Graph& g, const Graph& h, int v);

}  // namespace hcover
