#pragma once

#include <functional>
#include <vector>

#include "dist2/graph.hpp"

namespace dist2 {

using GraphVisitor = std::function<void(const Graph&)>;

// Visits every labeled graph on n vertices (all 2^(n(n-1)/2) edge masks),
// connected or not. n <= 7.
uint64_t enumerate_labeled(int n, const GraphVisitor& visit);

// Visits exactly one representative per isomorphism class of connected
// graphs on n vertices, by canonical augmentation: each graph is grown from
// its canonical parent (remove the non-cut vertex of smallest invariant key
// whose orbit holds the largest canonical position), so no isomorph store is
// needed. Soft cap n <= 11 unless force.
uint64_t enumerate_connected(int n, const GraphVisitor& visit, bool force = false);

// Parallel decomposition: the class representatives on seed_order vertices,
// and the expansion of one representative's subtree up to order n. Expanding
// every seed visits each order-n class exactly once.
std::vector<Graph> connected_seeds(int seed_order);
uint64_t expand_connected(const Graph& seed, int n, const GraphVisitor& visit);

}  // namespace dist2
