#pragma once

#include <string>

#include "walklab/graph.hpp"

namespace walklab {

// Parse failure with the byte offset of the offending character.
struct graph6_error : std::runtime_error {
  graph6_error(const std::string& what, size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        byte_offset(offset) {}
  size_t byte_offset;
};

// graph6 short form, n <= 62: one length byte then the upper triangle in
// column order, six bits per printable character.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

}  // namespace walklab
