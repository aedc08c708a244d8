#pragma once

#include <string>
#include <string_view>

#include "dist2/graph.hpp"

namespace dist2 {

// graph6: size byte chr(n+63), then the upper-triangle bits in column order
// (columns j=1..n-1, rows i<j) packed into 6-bit groups, each emitted as
// chr(value+63). Single-byte size form only, so n <= 62.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view s);

// graph6 of the canonically relabeled graph; equal strings iff isomorphic.
std::string canonical_graph6(const Graph& g);

}  // namespace dist2
