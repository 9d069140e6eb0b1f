#include "hcover/cliques.hpp"

#include <bit>
#include <numeric>

namespace hcover {

Count count_cliques_in(const Graph& g, Mask within, int t) {
  if (t < 0) return 0;
  if (t == 0) return 1;
  if (t == 1) return std::popcount(within);
  if (t == 2) {
    Count twice = 0;
    for (Mask m = within; m; m &= m - 1) twice += std::popcount(g.neighbors(std::countr_zero(m)) & within);
    return twice / 2;
  }
  if (std::popcount(within) < t) return 0;
  Count total = 0;
  // Each clique is counted once, from its lowest vertex.
  for (Mask m = within; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    const Mask higher = within & g.neighbors(v) & ~low_bits(v + 1);
    if (std::popcount(higher) >= t - 1) total += count_cliques_in(g, higher, t - 1);
  }
  return total;
}

Count count_cliques(const Graph& g, int t) {
  if (t <= 0) throw ArgumentError("clique order must be at least 1");
  return count_cliques_in(g, g.vertices().bits(), t);
}

Count binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i; divide first by the common factor to stay in range.
    const std::int64_t g = std::gcd(r, i);
    r = (r / g) * ((n - k + i) / (i / g));
  }
  return r;
}

}  // namespace hcover
