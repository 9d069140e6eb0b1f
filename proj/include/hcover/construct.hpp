#pragma once

#include <span>

#include "hcover/cover.hpp"
#include "hcover/graph.hpp"
#include "hcover/profile.hpp"

namespace hcover {

// Two copies of h glued along the densest (n - r)-set B = witness_e[n - r].
// Vertices 0..n-1 carry the first copy; n..n+r-1 are the second copy's
// private side, in the order of V(h) \ B.
Graph build_L(const Graph& h, int t, int r, const CoverageProfile& p);

// h with its lowest-index minimum-degree vertex moved to n - 1, plus N - n
// clones of it (vertices n..N-1) adjacent to its neighbourhood.
Graph build_M(const Graph& h, int target);

// (q - 1) h  +  build_L(h, t, r), with N = q n + r.
Graph build_ideal_extremal(const Graph& h, int t, int target, const CoverageProfile& p);

// Disjoint union of build_M(h, b_i); every b_i in [n, 2n) and the b_i sum to N.
Graph build_elementary_extremal(const Graph& h, int target, std::span<const int> parts);

// One central copy of h on 0..n-1; every further part k < n adds k vertices that
// replace V(h) \ witness_e[n - k] in a second copy glued onto the centre, and a
// further part n adds a disjoint copy. Realises c_t = sum a[k] over all parts.
// `parts` must contain n.
Graph build_realization(const Graph& h, int t, std::span<const int> parts, const CoverageProfile& p);
CoverAssignment realization_cover(const Graph& h, std::span<const int> parts, const CoverageProfile& p);

// circulant(l, 1..d/2) + circulant(l + 1, 1..d/2): d-regular on 2l + 1 vertices.
Graph build_tightness(int l, int d);

// K_n on 0..n-1 with N - n pendant vertices attached to vertex 0.
Graph build_pendant_clique(int n, int target);

// The copies of h used by the constructions above, as cover assignments.
CoverAssignment ideal_extremal_cover(const Graph& h, int target, const CoverageProfile& p);
CoverAssignment elementary_extremal_cover(const Graph& h, std::span<const int> parts);

}  // namespace hcover
