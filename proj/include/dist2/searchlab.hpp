#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dist2/graph.hpp"

namespace dist2 {

// floor((n-1)^2/4) + 1: e(G_2) is an integer, so the bound is verified in
// its floored form (which the constructions attain for every n >= 5).
int bound_value(int n);

enum class SearchMode { exhaustive, stream, anneal };

struct SearchReport {
  int n = 0;
  SearchMode mode = SearchMode::exhaustive;
  bool diam2_only = false;
  uint64_t graphs_seen = 0;
  uint64_t graphs_admissible = 0;  // triangle-free G_2 (after the diameter filter)
  int max_pairs = -1;              // -1 when no admissible graph was seen
  int bound = 0;
  bool bound_holds = true;
  std::vector<std::string> extremal_certs;  // canonical graph6, sorted ascending
  bool certs_truncated = false;
  int hypothesis_max_pairs = -1;  // restricted to graphs with a covered vertex
  // runtime metadata; never serialized into report documents
  double wall_time_s = 0;
  int worker_count = 1;
};

struct VerifyOptions {
  bool diam2_only = false;
  int workers = 1;
  bool long_run = false;        // lifts the default n <= 10 ceiling
  std::string checkpoint_path;  // per-subtree resume file, empty = off
};

SearchReport verify_bound(int n, const VerifyOptions& opt = {});
// One graph6 string per line; lines starting with ">>" are skipped.
SearchReport verify_bound_stream(int n, std::istream& in, bool diam2_only = false);

enum class Claim {
  lemma_2_1,
  lemma_2_2,
  obs_2_1,
  lemma_2_3_monotone,
  move_preserves_tfree,
  subcase_2_2_split_exists,
};

const char* claim_name(Claim c);
// Measured-only claims report their witnesses but never fail a run.
bool claim_is_measured_only(Claim c);

struct ClaimWitness {
  std::string g6;  // canonical graph6 of the graph
  std::vector<int> vertices;
  std::string note;
};

struct ClaimEntry {
  uint64_t graphs_tested = 0;
  uint64_t violations = 0;
  uint64_t both_count = 0;  // lemma_2_2 only: vertices tagged with both alternatives
  std::vector<ClaimWitness> witnesses;
  bool witnesses_truncated = false;
};

struct ClaimReport {
  int n = 0;
  std::map<Claim, ClaimEntry> claims;
  double wall_time_s = 0;
  int worker_count = 1;
};

ClaimReport check_lemma_claims(int n, int workers = 1);

struct AnnealOptions {
  uint64_t steps = 10000;
  uint64_t seed = 1;
  int restarts = 1;
};

// Feasibility-preserving edge-flip search: moves that disconnect the graph
// or put a triangle into G_2 are rejected outright, so every visited state
// is certifiable. Deterministic for fixed options.
SearchReport anneal_search(int n, const AnnealOptions& opt = {});

}  // namespace dist2
