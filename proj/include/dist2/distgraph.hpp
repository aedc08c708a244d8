#pragma once

#include <optional>

#include "dist2/graph.hpp"

namespace dist2 {

// G_k: same vertex set, edges exactly the pairs at distance k in the source.
struct DistanceKGraph {
  int k = 0;
  int base_n = 0;
  Graph graph;
};

DistanceKGraph distance_k_graph(const Graph& g, int k);  // throws Disconnected
int pair_count(const DistanceKGraph& dk);
int k_degree(const DistanceKGraph& dk, int v);

// G_2 rows without the connectivity gate; d(u,v)=2 is a local condition.
Graph distance2_graph(const Graph& g);

struct Triangle {
  int a, b, c;
  bool operator==(const Triangle&) const = default;
};

// Lexicographically smallest pairwise-adjacent triple, if any.
std::optional<Triangle> find_triangle(const Graph& g);

// Exact maximum clique size, branch and bound over bitset candidate sets.
int clique_number(const Graph& g);
int clique_number_rows(const uint64_t* rows, int n);

}  // namespace dist2
