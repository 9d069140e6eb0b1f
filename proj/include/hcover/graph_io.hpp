#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hcover/graph.hpp"

namespace hcover {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Headerless graph6, short form only (n <= 62). Labels are kept as given.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// "n m" followed by m lines "u v" with u < v.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace hcover
