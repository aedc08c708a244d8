#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dist2/graph.hpp"

namespace dist2 {

// Canonical byte string: equal iff the graphs are isomorphic.
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

using Perm = std::array<uint8_t, kMaxVertices>;  // vertex -> vertex or vertex -> position

// Full individualization-refinement result: canonical labeling, vertex
// orbits under the automorphism group, and the vertices observed at each
// canonical position across all minimal labelings explored.
struct CanonicalResult {
  int n = 0;
  CanonicalForm form;
  Perm position{};                       // vertex -> canonical position (one witness)
  std::array<uint64_t, kMaxVertices> at_position{};
  std::vector<Perm> generators;          // discovered automorphisms, vertex -> vertex
  std::array<uint8_t, kMaxVertices> orbit{};  // vertex -> smallest vertex in its orbit
  int leaf_count = 0;

  bool same_orbit(int u, int v) const { return orbit[u] == orbit[v]; }
};

CanonicalResult canonical_analyze(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph canonical_relabel(const Graph& g);  // g with vertices renamed to canonical positions

}  // namespace dist2
