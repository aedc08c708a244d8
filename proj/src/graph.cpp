#include "dist2/graph.hpp"

namespace dist2 {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1 || n > kMaxVertices) fail(Errc::cap_exceeded, "vertex count out of range [1,64]");
  Graph g;
  g.n_ = n;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) fail(Errc::bad_edge, "edge endpoint out of range");
    if (u == v) fail(Errc::bad_edge, "self-loop");
    g.add_edge(u, v);
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int n, const uint64_t* rows) {
  if (n < 1 || n > kMaxVertices) fail(Errc::cap_exceeded, "vertex count out of range [1,64]");
  Graph g;
  g.n_ = n;
  uint64_t mask = low_mask(n);
  for (int i = 0; i < n; ++i) g.adj_[i] = rows[i] & mask & ~(1ULL << i);
  return g;
}

Graph Graph::empty(int n) {
  if (n < 1 || n > kMaxVertices) fail(Errc::cap_exceeded, "vertex count out of range [1,64]");
  Graph g;
  g.n_ = n;
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int i = 0; i < n_; ++i) twice += __builtin_popcountll(adj_[i]);
  return twice / 2;
}

DistRow bfs_distances(const Graph& g, int v) {
  DistRow d;
  d.fill(kUnreachable);
  uint64_t seen = 1ULL << v;
  uint64_t frontier = seen;
  d[v] = 0;
  for (int dist = 1; frontier; ++dist) {
    uint64_t next = 0;
    for (uint64_t f = frontier; f; f &= f - 1) next |= g.row(__builtin_ctzll(f));
    next &= ~seen;
    for (uint64_t f = next; f; f &= f - 1) d[__builtin_ctzll(f)] = static_cast<int8_t>(dist);
    seen |= next;
    frontier = next;
  }
  return d;
}

DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m.row(v) = bfs_distances(g, v);
  return m;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    DistRow d = bfs_distances(g, v);
    for (int u = 0; u < g.order(); ++u) {
      if (d[u] == kUnreachable) return kUnreachable;
      if (d[u] > best) best = d[u];
    }
  }
  return best;
}

VertexSet neighborhood_i(const Graph& g, int v, int radius) {
  DistRow d = bfs_distances(g, v);
  VertexSet s;
  for (int u = 0; u < g.order(); ++u)
    if (d[u] == radius) s.add(u);
  return s;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s)
    if ((s.bits & ~g.row(v) & ~(1ULL << v)) != 0) return false;
  return true;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) fail(Errc::empty_set, "induced subgraph of empty set");
  int idx[kMaxVertices];
  int k = 0;
  for (int v : s) idx[v] = k++;
  Graph h = Graph::empty(k);
  for (int v : s)
    for (int u : VertexSet(g.row(v) & s.bits))
      if (u < v) h.add_edge(idx[u], idx[v]);
  return h;
}

bool is_connected(const Graph& g) {
  uint64_t seen = 1, frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    for (uint64_t f = frontier; f; f &= f - 1) next |= g.row(__builtin_ctzll(f));
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == low_mask(g.order());
}

Graph complement(const Graph& g) {
  int n = g.order();
  Graph h = Graph::empty(n);
  for (int v = 0; v < n; ++v) {
    uint64_t row = ~g.row(v) & low_mask(n) & ~(1ULL << v);
    for (int u : VertexSet(row))
      if (u < v) h.add_edge(u, v);
  }
  return h;
}

Graph make_path(int n) {
  Graph g = Graph::empty(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  Graph g = make_path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph make_complete(int n) {
  Graph g = Graph::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph make_star(int leaves) {
  Graph g = Graph::empty(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace dist2
