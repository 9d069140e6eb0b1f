#pragma once

#include <string>
#include <vector>

#include "hcover/graph.hpp"

namespace hcover {

struct CanonicalForm {
  Graph graph;                // g relabelled by `labeling`
  std::vector<int> labeling;  // labeling[v] = canonical label of v
};

// Canonical relabelling: isomorphic inputs give identical `graph`.
// Iterated neighbourhood-colour refinement, then individualisation of the
// first smallest non-singleton cell with twin and automorphism pruning.
CanonicalForm canonical_form(const Graph& g);

// graph6 of the canonical form, usable as a dedup key.
std::string canonical_key(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace hcover
