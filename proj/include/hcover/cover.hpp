#pragma once

#include <stdexcept>
#include <vector>

#include "hcover/graph.hpp"

namespace hcover {

class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// sets[v] = S(v): n vertices containing v whose induced graph contains a copy of H.
struct CoverAssignment {
  std::vector<VertexSet> sets;
};

// Throws ContractError naming the first vertex whose set is invalid.
void validate_cover(const Graph& g, const Graph& h, const CoverAssignment& cover);

}  // namespace hcover
