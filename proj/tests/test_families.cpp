#include "dist2/families.hpp"

#include <random>

#include "doctest.h"
#include "dist2/canonical.hpp"
#include "dist2/distgraph.hpp"
#include "dist2/structcheck.hpp"
#include "oracles.hpp"

using namespace dist2;

TEST_CASE("find_spindle") {
  Spindle s = find_spindle(make_path(4));
  CHECK(s.path == std::vector<int>{0, 1, 2, 3});

  Spindle c6 = find_spindle(make_cycle(6));
  CHECK(c6.length() == 3);
  CHECK(c6.path == std::vector<int>{0, 1, 2, 3});

  CHECK_THROWS_AS((void)find_spindle(make_complete(3)), Error);
  CHECK_THROWS_AS((void)find_spindle(Graph::empty(2)), Error);
}

TEST_CASE("find_spindle is a geodesic on random graphs") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_connected_graph(rng, n, 0.3);
    if (diameter(g) < 2) continue;
    Spindle s = find_spindle(g);
    CHECK(s.length() == diameter(g));
    auto d = oracle::distances(g);
    for (int i = 0; i <= s.length(); ++i) CHECK(d[s.path[0]][s.path[i]] == i);
  }
}

TEST_CASE("move_vd on P4 raises the pair count") {
  Graph p4 = make_path(4);
  Graph moved = move_vd(p4, find_spindle(p4));
  CHECK(moved == Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}}));
  CHECK(oracle::count_pairs_at_distance(p4, 2) == 2);
  CHECK(oracle::count_pairs_at_distance(moved, 2) == 3);
}

TEST_CASE("move_vd on P3 is a relabeled P3") {
  Graph p3 = make_path(3);
  Graph moved = move_vd(p3, find_spindle(p3));
  CHECK(canonical_form(moved) == canonical_form(p3));
  CHECK(oracle::count_pairs_at_distance(moved, 2) == 1);
}

TEST_CASE("move_vd on C6") {
  Graph c6 = make_cycle(6);
  Graph moved = move_vd(c6, find_spindle(c6));
  CHECK(is_connected(moved));
  CHECK(oracle::count_pairs_at_distance(moved, 2) >= 6);
}

TEST_CASE("move_vd rejects invalid spindles") {
  Graph p4 = make_path(4);
  Spindle bogus;
  bogus.path = {0, 2, 1, 3};
  CHECK_THROWS_AS((void)move_vd(p4, bogus), Error);
}

TEST_CASE("reduce_to_diameter_2") {
  ReduceResult c5 = reduce_to_diameter_2(make_cycle(5));
  CHECK(c5.graph == make_cycle(5));
  CHECK(c5.pair_trace.empty());
  CHECK(!c5.cap_exceeded);

  ReduceResult p4 = reduce_to_diameter_2(make_path(4));
  CHECK(p4.pair_trace == std::vector<int>{2, 3});
  CHECK(diameter(p4.graph) <= 2);
  CHECK(p4.tfree_trace == std::vector<bool>{true, false});

  ReduceResult p6 = reduce_to_diameter_2(make_path(6));
  CHECK(diameter(p6.graph) <= 2);
  CHECK(!p6.cap_exceeded);
  for (size_t i = 1; i < p6.pair_trace.size(); ++i)
    CHECK(p6.pair_trace[i] >= p6.pair_trace[i - 1]);
}

TEST_CASE("gpp family") {
  CHECK(canonical_form(build_family_gpp({1, 1})) == canonical_form(make_cycle(5)));

  Graph g22 = build_family_gpp({2, 2});
  CHECK(g22.order() == 7);
  CHECK(oracle::count_pairs_at_distance(g22, 2) == 10);

  Graph g31 = build_family_gpp({3, 1});
  CHECK(g31.order() == 7);
  CHECK(oracle::count_pairs_at_distance(g31, 2) == 9);

  for (int x = 1; x <= 8; ++x)
    for (int y = 1; x + y + 3 <= 20; ++y) {
      Graph g = build_family_gpp({x, y});
      CHECK(is_connected(g));
      CHECK(oracle::count_pairs_at_distance(g, 2) == closed_form_gpp({x, y}));
      Graph g2 = distance2_graph(g);
      CHECK(!find_triangle(g2).has_value());
    }
}

TEST_CASE("closed_form_gpp") {
  CHECK(closed_form_gpp({1, 1}) == 5);
  CHECK(closed_form_gpp({4, 2}) == 16);
  for (int n = 5; n <= 21; n += 2) {
    int half = (n - 3) / 2;
    CHECK(closed_form_gpp({half, half}) == (n - 1) * (n - 1) / 4 + 1);
  }
}

TEST_CASE("gp family: brute-force count is xy + y + 2 under the builder labels") {
  CHECK(oracle::count_pairs_at_distance(build_family_gp({1, 1}), 2) == 4);
  CHECK(oracle::count_pairs_at_distance(build_family_gp({2, 1}), 2) == 2 * 1 + 1 + 2);
  for (int x = 1; x <= 7; ++x)
    for (int y = 1; x + y + 3 <= 18; ++y) {
      Graph g = build_family_gp({x, y});
      int n = g.order();
      int e = oracle::count_pairs_at_distance(g, 2);
      CHECK(e == x * y + y + 2);
      CHECK(e <= (n - 2) * (n - 2) / 4 + 2);
    }
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS((void)build_family_gpp({0, 1}), Error);
  CHECK_THROWS_AS((void)build_family_gpp({40, 40}), Error);
}

TEST_CASE("subcase 2.2 rewiring on the quoted 7-vertex instance") {
  // v=0; V1={1,2} within the cover of N(0) (plus 6 in the clique); U1 holds q=3
  // and q2=4 with cross edge 2-3; r=5 adjacent to p1=1 and q=3; B={5}.
  Graph g = Graph::from_edges(7, {{0, 1},
                                  {0, 2},
                                  {0, 6},
                                  {0, 3},
                                  {0, 4},
                                  {1, 2},
                                  {1, 6},
                                  {2, 6},
                                  {3, 4},
                                  {2, 3},
                                  {5, 1},
                                  {5, 3}});
  CHECK(diameter(g) == 2);
  auto cover = two_clique_cover(g, 0);
  REQUIRE(cover.has_value());
  CHECK(cover->a == (VertexSet().add(1).add(2).add(6)));
  CHECK(cover->b == (VertexSet().add(3).add(4)));
  CHECK(subcase_2_2_basis(g, 0) == VertexSet::single(5));

  int before = oracle::count_pairs_at_distance(g, 2);
  Graph h = rewire_subcase_2_2(g, 0, VertexSet::single(5), VertexSet());
  int after = oracle::count_pairs_at_distance(h, 2);
  CHECK(after - before >= 0);
  // cross edge gone, 5 cut from the U side
  CHECK(!h.has_edge(2, 3));
  CHECK(!h.has_edge(5, 3));
  CHECK(h.has_edge(5, 1));

  auto split = find_split_subcase_2_2(g, 0);
  REQUIRE(split.has_value());
}

TEST_CASE("rewire_subcase_2_2 degenerate split and validation") {
  Graph g = Graph::from_edges(7, {{0, 1},
                                  {0, 2},
                                  {0, 6},
                                  {0, 3},
                                  {0, 4},
                                  {1, 2},
                                  {1, 6},
                                  {2, 6},
                                  {3, 4},
                                  {2, 3},
                                  {5, 1},
                                  {5, 3}});
  // b1 = whole basis, b2 empty is allowed; overlapping or non-covering not
  CHECK_NOTHROW((void)rewire_subcase_2_2(g, 0, VertexSet::single(5), VertexSet()));
  CHECK_NOTHROW((void)rewire_subcase_2_2(g, 0, VertexSet(), VertexSet::single(5)));
  CHECK_THROWS_AS((void)rewire_subcase_2_2(g, 0, VertexSet(), VertexSet()), Error);
  CHECK_THROWS_AS(
      (void)rewire_subcase_2_2(g, 0, VertexSet::single(5), VertexSet::single(5)), Error);
  // no cross edge once 2-3 is removed
  Graph nocross = g;
  nocross.remove_edge(2, 3);
  CHECK_THROWS_AS((void)rewire_subcase_2_2(nocross, 0, VertexSet(), VertexSet()), Error);
}

TEST_CASE("lemma 2.3 monotonicity on random diameter>=3 graphs with tfree G_2") {
  std::mt19937_64 rng(63);
  int tested = 0;
  for (int trial = 0; trial < 6000 && tested < 120; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    Graph g = oracle::random_connected_graph(rng, n, 0.3);
    if (diameter(g) < 3) continue;
    if (find_triangle(distance2_graph(g))) continue;
    ++tested;
    Graph moved = move_vd(g, find_spindle(g));
    CHECK(oracle::count_pairs_at_distance(moved, 2) >= oracle::count_pairs_at_distance(g, 2));
  }
  CHECK(tested > 0);
}
