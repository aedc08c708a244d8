#include "dist2/families.hpp"

#include "dist2/distgraph.hpp"
#include "dist2/structcheck.hpp"

namespace dist2 {

Spindle find_spindle(const Graph& g) {
  if (!is_connected(g)) fail(Errc::disconnected, "spindle needs a connected graph");
  int d = diameter(g);
  if (d < 2) fail(Errc::diameter_too_small, "diameter below 2");
  int n = g.order();
  int v0 = -1;
  DistRow from_v0{};
  for (int v = 0; v < n && v0 < 0; ++v) {
    DistRow row = bfs_distances(g, v);
    for (int u = 0; u < n; ++u)
      if (row[u] == d) {
        v0 = v;
        from_v0 = row;
        break;
      }
  }
  int vd = 0;
  while (from_v0[vd] != d) ++vd;
  DistRow to_vd = bfs_distances(g, vd);

  Spindle s;
  s.path.push_back(v0);
  int cur = v0;
  for (int i = 0; i < d; ++i) {
    for (int u : g.neighbors(cur)) {
      if (from_v0[u] == i + 1 && to_vd[u] == d - i - 1) {
        s.path.push_back(u);
        cur = u;
        break;
      }
    }
  }
  return s;
}

Graph move_vd(const Graph& g, const Spindle& s) {
  int d = s.length();
  if (d < 2) fail(Errc::invalid_spindle, "spindle shorter than 2");
  DistRow from_start = bfs_distances(g, s.path[0]);
  for (int i = 0; i <= d; ++i) {
    int v = s.path[i];
    if (v < 0 || v >= g.order() || from_start[v] != i)
      fail(Errc::invalid_spindle, "path is not a geodesic of the graph");
    if (i > 0 && !g.has_edge(s.path[i - 1], v))
      fail(Errc::invalid_spindle, "consecutive path vertices not adjacent");
  }
  int vd1 = s.path[d - 1], vd2 = s.path[d - 2];
  VertexSet moved = VertexSet(g.row(vd1)).remove(vd2);
  Graph h = g;
  for (int u : moved) {
    h.remove_edge(vd1, u);
    h.add_edge(vd2, u);
  }
  return h;
}

ReduceResult reduce_to_diameter_2(const Graph& g) {
  if (!is_connected(g)) fail(Errc::disconnected, "reduce needs a connected graph");
  ReduceResult res;
  res.graph = g;
  int cap = g.order() * g.order();
  int steps = 0;
  while (diameter(res.graph) > 2) {
    if (steps == 0) {
      Graph g2 = distance2_graph(res.graph);
      res.pair_trace.push_back(g2.edge_count());
      res.tfree_trace.push_back(!find_triangle(g2).has_value());
    }
    if (steps >= cap) {
      res.cap_exceeded = true;
      return res;
    }
    res.graph = move_vd(res.graph, find_spindle(res.graph));
    Graph g2 = distance2_graph(res.graph);
    res.pair_trace.push_back(g2.edge_count());
    res.tfree_trace.push_back(!find_triangle(g2).has_value());
    ++steps;
  }
  return res;
}

namespace {

void check_params(FamilyParams p) {
  if (p.x < 1 || p.y < 1) fail(Errc::invalid_input, "family parameters must be >= 1");
  if (p.x + p.y + 3 > kMaxVertices) fail(Errc::cap_exceeded, "family order above 64");
}

void add_clique(Graph& g, int first, int count) {
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) g.add_edge(first + i, first + j);
}

}  // namespace

Graph build_family_gpp(FamilyParams p) {
  check_params(p);
  int n = p.x + p.y + 3;
  Graph g = Graph::empty(n);
  int apex = 0, vfirst = 1, ufirst = 1 + p.x, u = n - 2, w = n - 1;
  add_clique(g, vfirst, p.x);
  add_clique(g, ufirst, p.y);
  for (int i = 0; i < p.x; ++i) {
    g.add_edge(apex, vfirst + i);
    g.add_edge(u, vfirst + i);
  }
  for (int i = 0; i < p.y; ++i) {
    g.add_edge(apex, ufirst + i);
    g.add_edge(w, ufirst + i);
  }
  g.add_edge(u, w);
  return g;
}

Graph build_family_gp(FamilyParams p) {
  check_params(p);
  int n = p.x + p.y + 3;
  Graph g = Graph::empty(n);
  int apex = 0, u1 = 1, v12first = 2, v21first = 2 + p.x, u2 = n - 1;
  // N(apex) = {u1} + x vertices, a clique
  g.add_edge(apex, u1);
  for (int i = 0; i < p.x; ++i) g.add_edge(apex, v12first + i);
  add_clique(g, u1, 1 + p.x);
  // second neighborhood: y vertices + u2, a clique
  add_clique(g, v21first, p.y + 1);
  for (int i = 0; i < p.y; ++i) g.add_edge(u1, v21first + i);
  for (int i = 0; i < p.x; ++i) g.add_edge(v12first + i, u2);
  return g;
}

int closed_form_gpp(FamilyParams p) { return p.x * p.y + p.x + p.y + 2; }

VertexSet subcase_2_2_basis(const Graph& g, int v) {
  auto cover = two_clique_cover(g, v);
  if (!cover) return VertexSet();
  Graph g2 = distance2_graph(g);
  VertexSet basis;
  for (int u : VertexSet(g2.row(v)))
    if ((g2.row(u) & cover->a.bits) && (g2.row(u) & cover->b.bits)) basis.add(u);
  return basis;
}

Graph rewire_subcase_2_2(const Graph& g, int v, VertexSet b1, VertexSet b2) {
  auto cover = two_clique_cover(g, v);
  if (!cover) fail(Errc::hypothesis_failed, "no two-clique cover at v");
  uint64_t va = cover->a.bits, ub = cover->b.bits;
  if (va == 0 || ub == 0) fail(Errc::hypothesis_failed, "cover does not use two cliques");
  bool cross = false;
  for (int x : cover->a)
    if (g.row(x) & ub) cross = true;
  if (!cross) fail(Errc::hypothesis_failed, "no edge between the cover cliques");
  if (b1.bits & b2.bits) fail(Errc::invalid_input, "b1 and b2 overlap");
  if ((b1 | b2) != subcase_2_2_basis(g, v))
    fail(Errc::invalid_input, "b1 and b2 must partition the basis set");

  Graph h = g;
  for (int x : cover->a)
    for (int y : VertexSet(h.row(x) & ub)) h.remove_edge(x, y);
  for (int s : b1)
    for (int y : VertexSet(h.row(s) & ub)) h.remove_edge(s, y);
  for (int s : b2)
    for (int y : VertexSet(h.row(s) & va)) h.remove_edge(s, y);
  return h;
}

std::optional<std::pair<VertexSet, VertexSet>> find_split_subcase_2_2(const Graph& g, int v) {
  VertexSet basis = subcase_2_2_basis(g, v);
  if (basis.count() > 20) fail(Errc::cap_exceeded, "basis too large for exhaustive splits");
  int before = distance2_graph(g).edge_count();
  uint64_t members[kMaxVertices];
  int k = 0;
  for (int u : basis) members[k++] = 1ULL << u;
  for (uint64_t pick = 0; pick < (1ULL << k); ++pick) {
    VertexSet b1;
    for (int i = 0; i < k; ++i)
      if ((pick >> i) & 1) b1.bits |= members[i];
    VertexSet b2 = basis - b1;
    Graph h = rewire_subcase_2_2(g, v, b1, b2);
    if (!is_connected(h)) continue;
    if (distance2_graph(h).edge_count() >= before) return std::make_pair(b1, b2);
  }
  return std::nullopt;
}

}  // namespace dist2
