#pragma once

#include <cstdint>

#include "hcover/graph.hpp"

namespace hcover {

using Count = std::int64_t;

// Number of t-vertex cliques of g. t = 0 is rejected.
Count count_cliques(const Graph& g, int t);

// Number of t-vertex cliques of g lying inside `within`. t = 0 counts the empty clique.
Count count_cliques_in(const Graph& g, Mask within, int t);

// Exact binomial coefficient, 0 when k > n or k < 0.
Count binomial(std::int64_t n, std::int64_t k);

}  // namespace hcover
