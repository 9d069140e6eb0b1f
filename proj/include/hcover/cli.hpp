#pragma once

#include <ostream>
#include <string>

#include "hcover/graph.hpp"

namespace hcover {

enum ExitCode : int { kExitOk = 0, kExitAssertion = 1, kExitUsage = 2, kExitResource = 3 };

// Named shorthand (K5, C7, P4, E3, K4+pendant, K4-e, star:k, tightness:l=4,d=2,
// circulant:m=9,jumps=1.2, gnp:n=16,p=0.5,seed=1, A|B for disjoint unions), a path
// to a graph6 or edge-list file, or inline graph6.
Graph resolve_graph(const std::string& spec);

// Entry point of the hcover tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hcover
