#pragma once

#include <optional>
#include <vector>

#include "dist2/graph.hpp"

namespace dist2 {

enum class Pattern { claw, c6, c6p, c6pp, c5_in_nbhd };
enum class C6Variant { c6, c6p, c6pp };

// Vertices realizing a forbidden pattern. For the claw the center comes
// first; for cycle patterns the vertices are listed in cycle order, with the
// chords at (0,2) for c6p and (0,2),(2,4) for c6pp.
struct PatternWitness {
  Pattern pattern;
  std::vector<int> vertices;
};

std::optional<PatternWitness> find_induced_claw(const Graph& g);
std::optional<PatternWitness> find_induced_c6_variant(const Graph& g, C6Variant variant);

// Partition of N(v) into two cliques (either possibly empty). Exists iff the
// complement of G[N(v)] is bipartite.
struct CliqueCover2 {
  VertexSet a, b;
};

std::optional<CliqueCover2> two_clique_cover(const Graph& g, int v);
std::optional<PatternWitness> find_c5_in_neighborhood(const Graph& g, int v);

int stability_number(const Graph& g);

enum class NbhdTag { two_cliques, c5_nbhd, both, neither };

struct Lemma22Report {
  int n = 0;
  std::array<NbhdTag, kMaxVertices> tags{};
  int both_count = 0;
  int neither_count = 0;  // would contradict the dichotomy
};

// Requires a claw-free graph with stability number >= 3 (HypothesisFailed
// otherwise); tags every vertex with which alternative its neighborhood
// satisfies.
Lemma22Report check_lemma_2_2(const Graph& g);

struct Obs21Violation {
  int v, x, y;  // x,y in N^2(v), non-adjacent
};

// Requires diameter exactly 2 and triangle-free G_2 (HypothesisFailed
// otherwise); absent result means every N^2(v) induces a clique.
std::optional<Obs21Violation> check_observation_2_1(const Graph& g);

// Smallest vertex whose neighborhood splits into at most two cliques.
std::optional<int> theorem_hypothesis_holds(const Graph& g);

}  // namespace dist2
