#include "dist2/canonical.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace dist2;

TEST_CASE("canonical_form is invariant under relabeling") {
  Graph p3a = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph p3b = Graph::from_edges(3, {{0, 1}, {0, 2}});
  CHECK(canonical_form(p3a) == canonical_form(p3b));
  CHECK(canonical_form(p3a) != canonical_form(make_complete(3)));
}

TEST_CASE("all labelings of P4 give one canonical image") {
  std::vector<int> perm{0, 1, 2, 3};
  std::set<std::string> images;
  do {
    Graph g = oracle::apply_perm(make_path(4), perm);
    images.insert(canonical_form(g).bytes);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(images.size() == 1);
}

TEST_CASE("canonical_form constant under random permutations") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_graph(rng, n, 0.5);
    CanonicalForm base = canonical_form(g);
    for (int rep = 0; rep < 100; ++rep) {
      auto perm = oracle::random_permutation(rng, n);
      CHECK(canonical_form(oracle::apply_perm(g, perm)) == base);
    }
  }
}

TEST_CASE("canonical_form separates non-isomorphic graphs (n<=5 exhaustive)") {
  // bucket every labeled graph by canonical form; bucket count must equal the
  // number of isomorphism classes, and members of one bucket must be related
  // by some permutation
  for (int n = 1; n <= 5; ++n) {
    int bits = n * (n - 1) / 2;
    std::set<std::string> forms;
    uint64_t labeled = 0;
    for (uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
      Graph g = Graph::empty(n);
      int b = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
          if ((mask >> b) & 1) g.add_edge(i, j);
      forms.insert(canonical_form(g).bytes);
      ++labeled;
    }
    // known class counts for all graphs (connected or not) on n vertices
    static const uint64_t kAllGraphClasses[] = {1, 1, 2, 4, 11, 34};
    CHECK(forms.size() == kAllGraphClasses[n]);
    CHECK(labeled == (1ULL << bits));
  }
}

TEST_CASE("canonical orbits match brute-force automorphism orbits") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);  // n <= 6: 720 perms
    Graph g = oracle::random_graph(rng, n, 0.5);
    auto want = oracle::automorphism_orbits(g);
    CanonicalResult r = canonical_analyze(g);
    for (int v = 0; v < n; ++v) CHECK(r.orbit[v] == want[v]);
  }
  // special shapes with big groups
  for (const Graph& g : {make_complete(6), make_cycle(6), make_star(4), make_path(5)}) {
    auto want = oracle::automorphism_orbits(g);
    CanonicalResult r = canonical_analyze(g);
    for (int v = 0; v < g.order(); ++v) CHECK(r.orbit[v] == want[v]);
  }
}

TEST_CASE("canonical_relabel preserves the isomorphism class") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(rng, n, 0.4);
    Graph c = canonical_relabel(g);
    CHECK(canonical_form(c) == canonical_form(g));
    CHECK(c.edge_count() == g.edge_count());
  }
}

TEST_CASE("canonical search stays small on symmetric graphs") {
  CanonicalResult k10 = canonical_analyze(make_complete(10));
  CHECK(k10.orbit[9] == 0);  // one orbit
  CHECK(k10.leaf_count < 2000);
  CanonicalResult c10 = canonical_analyze(make_cycle(10));
  CHECK(c10.orbit[9] == 0);
  CHECK(c10.leaf_count < 2000);
}
