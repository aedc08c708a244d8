#include "dist2/distgraph.hpp"

#include "dist2/kernels.hpp"

namespace dist2 {

Graph distance2_graph(const Graph& g) {
  uint64_t rows[kMaxVertices];
  kernels::active_ops().distance2(g.rows(), g.order(), rows);
  return Graph::from_rows(g.order(), rows);
}

DistanceKGraph distance_k_graph(const Graph& g, int k) {
  if (!is_connected(g)) fail(Errc::disconnected, "distance_k_graph needs a connected graph");
  DistanceKGraph dk;
  dk.k = k;
  dk.base_n = g.order();
  if (k == 1) {
    dk.graph = g;
  } else if (k == 2) {
    dk.graph = distance2_graph(g);
  } else {
    Graph h = Graph::empty(g.order());
    for (int v = 0; v < g.order(); ++v) {
      DistRow d = bfs_distances(g, v);
      for (int u = v + 1; u < g.order(); ++u)
        if (d[u] == k) h.add_edge(v, u);
    }
    dk.graph = h;
  }
  return dk;
}

int pair_count(const DistanceKGraph& dk) { return dk.graph.edge_count(); }

int k_degree(const DistanceKGraph& dk, int v) { return dk.graph.degree(v); }

std::optional<Triangle> find_triangle(const Graph& g) {
  int n = g.order();
  for (int i = 0; i < n; ++i) {
    uint64_t above_i = g.row(i) & ~((2ULL << i) - 1);
    for (uint64_t r = above_i; r; r &= r - 1) {
      int j = __builtin_ctzll(r);
      uint64_t common = g.row(i) & g.row(j) & ~((2ULL << j) - 1);
      if (common) return Triangle{i, j, __builtin_ctzll(common)};
    }
  }
  return std::nullopt;
}

namespace {

int expand_clique(const uint64_t* rows, uint64_t cand, int size, int best) {
  while (cand) {
    if (size + __builtin_popcountll(cand) <= best) return best;
    int v = __builtin_ctzll(cand);
    cand &= cand - 1;
    int sub = expand_clique(rows, cand & rows[v], size + 1, best);
    if (sub > best) best = sub;
  }
  return size > best ? size : best;
}

}  // namespace

int clique_number_rows(const uint64_t* rows, int n) {
  if (n == 0) return 0;
  return expand_clique(rows, low_mask(n), 0, 0);
}

int clique_number(const Graph& g) { return clique_number_rows(g.rows(), g.order()); }

}  // namespace dist2
