#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dist2/graph.hpp"

namespace dist2 {

// Geodesic realizing the diameter: path[i] is at distance i from path[0].
struct Spindle {
  std::vector<int> path;
  int length() const { return static_cast<int>(path.size()) - 1; }
};

// Lexicographically smallest diametral geodesic: smallest start, then
// smallest far end, then smallest next hop per layer.
Spindle find_spindle(const Graph& g);  // Disconnected / DiameterTooSmall

// Delete the edges between v_{d-1} and V_d = N(v_{d-1}) \ {v_{d-2}}, then
// join v_{d-2} to all of V_d.
Graph move_vd(const Graph& g, const Spindle& s);

struct ReduceResult {
  Graph graph;
  std::vector<int> pair_trace;     // e(G_2) before the first move and after each
  std::vector<bool> tfree_trace;   // triangle-freeness of G_2 at the same points
  bool cap_exceeded = false;
};

// Repeats find_spindle + move_vd until diameter <= 2 or n^2 iterations.
ReduceResult reduce_to_diameter_2(const Graph& g);

struct FamilyParams {
  int x = 1, y = 1;  // both >= 1, x + y + 3 <= 64
};

// Apex adjacent to two disjoint cliques of sizes x and y with no edges
// between them; u joined to the x-clique, w to the y-clique, edge u-w.
// Layout: 0 apex, 1..x, x+1..x+y, then u, then w.
Graph build_family_gpp(FamilyParams p);

// Apex sees one clique {u1} + x vertices; second-neighborhood clique of
// y + 1 vertices {y vertices} + u2; u1 joined to the y vertices, the x
// vertices joined to u2. Layout: 0 apex, 1 u1, 2..x+1, x+2..x+y+1, then u2.
Graph build_family_gp(FamilyParams p);

int closed_form_gpp(FamilyParams p);  // xy + x + y + 2

// Second-neighborhood vertices forming distance-2 pairs with both sides of
// the canonical two-clique cover of N(v).
VertexSet subcase_2_2_basis(const Graph& g, int v);

// Delete all edges between the cover cliques V1 and U1 of N(v); cut b1 from
// U1 and b2 from V1. Requires a cover with at least one cross edge and
// b1, b2 partitioning the basis set.
Graph rewire_subcase_2_2(const Graph& g, int v, VertexSet b1, VertexSet b2);

// Exhaustive helper: smallest split (by b1 bitmask) whose rewiring keeps the
// graph connected and does not decrease the number of distance-2 pairs.
std::optional<std::pair<VertexSet, VertexSet>> find_split_subcase_2_2(const Graph& g, int v);

}  // namespace dist2
