#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcover/cover.hpp"
#include "hcover/profile.hpp"

namespace hcover {

struct CoverCheck {
  bool covered = false;
  std::optional<CoverAssignment> cover;  // S(v) = vertex set of a copy of h through v
  std::optional<int> uncovered;          // first vertex on no copy of h
};

CoverCheck is_covered(const Graph& g, const Graph& h);

struct OracleBudget {
  int max_order = 8;
  std::uint64_t max_nodes = 1'000'000'000;
};

struct OracleResult {
  int N = 0;
  int t = 0;
  Count min_count = -1;                // -1 when nothing was found within budget
  Count start_level = 0;               // first K_t level searched
  std::vector<std::string> extremal;   // canonical graph6, sorted
  std::uint64_t nodes_explored = 0;
  bool complete = false;
};

// Ground-truth minimum number of K_t over N-vertex h-covered graphs. Graphs with
// at most L copies of K_t are generated by edge addition with canonical-form
// rejection, starting from L = the integer-program value and raising L until
// a covered graph appears. Throws SizeError when N exceeds budget.max_order and
// InfeasibleError when N < |h|.
OracleResult min_cover_exhaustive(const Graph& h, int t, int N, const OracleBudget& budget = {});

// Lower bound on c_t(g) from peeling cover sets in `order` (a permutation of V(g);
// empty means ascending). Throws ContractError for an invalid cover or order.
Count peel_bound(const Graph& g, const Graph& h, int t, const CoverAssignment& cover, const CoverageProfile& p,
                 const std::vector<int>& order = {});

// Every member of L_{n+r} (r > 0) or {h} (r = 0), as sorted canonical graph6.
std::vector<std::string> l_family(const Graph& h, int t, int r, const CoverageProfile& p);

// Every member of M_b for n <= b < 2n, as sorted canonical graph6.
std::vector<std::string> m_family(const Graph& h, int b);

struct UniquenessReport {
  OracleResult oracle;
  std::vector<std::string> ideal_family;        // (q - 1) h + L_{n+r}
  std::vector<std::string> elementary_family;   // q-part unions of M_b
  std::vector<std::string> extremal_ideal;      // extremal graphs in the ideal family
  std::vector<std::string> extremal_elementary; // extremal graphs in the elementary family
  std::vector<std::string> outside;             // extremal graphs in neither family
  std::vector<std::string> non_extremal;        // family members that are not extremal

  bool ideal_exact() const;       // extremal set equals the ideal family
  bool elementary_exact() const;  // extremal set equals the elementary family
};

UniquenessReport uniqueness_check(const Graph& h, int t, int N, const OracleBudget& budget = {});

}  // namespace hcover
