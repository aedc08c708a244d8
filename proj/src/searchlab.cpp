#include "dist2/searchlab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"

#include "dist2/distgraph.hpp"
#include "dist2/enumerate.hpp"
#include "dist2/families.hpp"
#include "dist2/graph6.hpp"
#include "dist2/kernels.hpp"
#include "dist2/structcheck.hpp"

namespace dist2 {

int bound_value(int n) { return (n - 1) * (n - 1) / 4 + 1; }

namespace {

constexpr int kCertCap = 64;
constexpr int kWitnessCap = 10;
constexpr int kDefaultCeiling = 10;

// known connected class counts, used to pick the parallel split depth
constexpr uint64_t kConnClasses[8] = {0, 1, 1, 2, 6, 21, 112, 853};

void insert_cert(std::vector<std::string>& certs, bool& truncated, std::string cert) {
  auto it = std::lower_bound(certs.begin(), certs.end(), cert);
  if (it != certs.end() && *it == cert) return;
  certs.insert(it, std::move(cert));
  if (certs.size() > kCertCap) {
    certs.pop_back();
    truncated = true;
  }
}

struct Partial {
  uint64_t seen = 0;
  uint64_t admissible = 0;
  int max_pairs = -1;
  std::vector<std::string> certs;
  bool certs_truncated = false;
  int hyp_max = -1;
};

void absorb(Partial& p, const Graph& g, bool diam2_only) {
  ++p.seen;
  int n = g.order();
  if (diam2_only && diameter(g) > 2) return;
  const kernels::Ops& ops = kernels::active_ops();
  uint64_t d2[kMaxVertices];
  ops.distance2(g.rows(), n, d2);
  if (ops.has_triangle(d2, n)) return;
  ++p.admissible;
  int e = static_cast<int>(ops.popcount_sum(d2, n) / 2);
  if (e > p.max_pairs) {
    p.max_pairs = e;
    p.certs.clear();
    p.certs_truncated = false;
  }
  if (e == p.max_pairs) insert_cert(p.certs, p.certs_truncated, canonical_graph6(g));
  if (e > p.hyp_max && theorem_hypothesis_holds(g)) p.hyp_max = e;
}

void merge(Partial& into, const Partial& from) {
  into.seen += from.seen;
  into.admissible += from.admissible;
  if (from.max_pairs > into.max_pairs) {
    into.max_pairs = from.max_pairs;
    into.certs = from.certs;
    into.certs_truncated = from.certs_truncated;
  } else if (from.max_pairs == into.max_pairs && from.max_pairs >= 0) {
    for (const std::string& c : from.certs)
      insert_cert(into.certs, into.certs_truncated, c);
    into.certs_truncated = into.certs_truncated || from.certs_truncated;
  }
  into.hyp_max = std::max(into.hyp_max, from.hyp_max);
}

SearchReport finish(const Partial& total, int n, SearchMode mode, bool diam2_only) {
  SearchReport rep;
  rep.n = n;
  rep.mode = mode;
  rep.diam2_only = diam2_only;
  rep.graphs_seen = total.seen;
  rep.graphs_admissible = total.admissible;
  rep.max_pairs = total.max_pairs;
  rep.bound = bound_value(n);
  rep.bound_holds = total.max_pairs <= rep.bound;
  rep.extremal_certs = total.certs;
  rep.certs_truncated = total.certs_truncated;
  rep.hypothesis_max_pairs = total.hyp_max;
  return rep;
}

nlohmann::json partial_to_json(size_t seed, const Partial& p) {
  return nlohmann::json{{"seed", seed},
                        {"seen", p.seen},
                        {"admissible", p.admissible},
                        {"max_pairs", p.max_pairs},
                        {"certs", p.certs},
                        {"certs_truncated", p.certs_truncated},
                        {"hyp_max", p.hyp_max}};
}

Partial partial_from_json(const nlohmann::json& j) {
  Partial p;
  p.seen = j.at("seen").get<uint64_t>();
  p.admissible = j.at("admissible").get<uint64_t>();
  p.max_pairs = j.at("max_pairs").get<int>();
  p.certs = j.at("certs").get<std::vector<std::string>>();
  p.certs_truncated = j.at("certs_truncated").get<bool>();
  p.hyp_max = j.at("hyp_max").get<int>();
  return p;
}

}  // namespace

SearchReport verify_bound(int n, const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  if (n < 1) fail(Errc::invalid_input, "n must be positive");
  if (n > kDefaultCeiling && !opt.long_run)
    fail(Errc::cap_exceeded, "n > 10 needs the long-run flag");
  int workers = std::max(1, opt.workers);

  // split depth: enough subtrees to keep every worker busy
  int seed_order = 0;
  if (workers > 1 && n >= 3) {
    for (int d = 2; d <= std::min(7, n - 1); ++d) {
      seed_order = d;
      if (kConnClasses[d] >= 8ULL * workers) break;
    }
  }

  Partial total;
  if (seed_order == 0) {
    enumerate_connected(n, [&](const Graph& g) { absorb(total, g, opt.diam2_only); },
                        opt.long_run);
    SearchReport rep = finish(total, n, SearchMode::exhaustive, opt.diam2_only);
    rep.worker_count = 1;
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }

  std::vector<Graph> seeds = connected_seeds(seed_order);
  std::vector<Partial> partials(seeds.size());
  std::vector<char> done(seeds.size(), 0);

  std::mutex ckpt_mutex;
  std::ofstream ckpt_out;
  if (!opt.checkpoint_path.empty()) {
    std::ifstream in(opt.checkpoint_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line);
      size_t idx = j.at("seed").get<size_t>();
      if (idx < seeds.size()) {
        partials[idx] = partial_from_json(j);
        done[idx] = 1;
      }
    }
    ckpt_out.open(opt.checkpoint_path, std::ios::app);
    if (!ckpt_out) fail(Errc::io_error, "cannot open checkpoint file");
  }

  std::atomic<size_t> next{0};
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= seeds.size()) return;
      if (done[i]) continue;
      Partial& p = partials[i];
      expand_connected(seeds[i], n, [&](const Graph& g) { absorb(p, g, opt.diam2_only); });
      if (ckpt_out.is_open()) {
        std::lock_guard<std::mutex> lock(ckpt_mutex);
        ckpt_out << partial_to_json(i, p).dump() << "\n";
        ckpt_out.flush();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (const Partial& p : partials) merge(total, p);
  SearchReport rep = finish(total, n, SearchMode::exhaustive, opt.diam2_only);
  rep.worker_count = workers;
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

SearchReport verify_bound_stream(int n, std::istream& in, bool diam2_only) {
  auto t0 = std::chrono::steady_clock::now();
  Partial total;
  std::string line;
  uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty() || line.rfind(">>", 0) == 0) continue;
    Graph g = decode_graph6(line);
    if (g.order() != n)
      fail(Errc::invalid_input,
           "stream line " + std::to_string(lineno) + ": order != " + std::to_string(n));
    if (!is_connected(g))
      fail(Errc::invalid_input, "stream line " + std::to_string(lineno) + ": disconnected");
    absorb(total, g, diam2_only);
  }
  SearchReport rep = finish(total, n, SearchMode::stream, diam2_only);
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

const char* claim_name(Claim c) {
  switch (c) {
    case Claim::lemma_2_1: return "LEMMA_2_1";
    case Claim::lemma_2_2: return "LEMMA_2_2";
    case Claim::obs_2_1: return "OBS_2_1";
    case Claim::lemma_2_3_monotone: return "LEMMA_2_3_MONOTONE";
    case Claim::move_preserves_tfree: return "MOVE_PRESERVES_TFREE";
    case Claim::subcase_2_2_split_exists: return "SUBCASE_2_2_SPLIT_EXISTS";
  }
  return "?";
}

bool claim_is_measured_only(Claim c) { return c == Claim::move_preserves_tfree; }

namespace {

const Claim kAllClaims[] = {Claim::lemma_2_1,           Claim::lemma_2_2,
                            Claim::obs_2_1,             Claim::lemma_2_3_monotone,
                            Claim::move_preserves_tfree, Claim::subcase_2_2_split_exists};

struct ClaimsPartial {
  std::map<Claim, ClaimEntry> claims;

  ClaimsPartial() {
    for (Claim c : kAllClaims) claims[c] = ClaimEntry{};
  }

  void witness(Claim c, const Graph& g, std::vector<int> verts, std::string note) {
    ClaimEntry& e = claims[c];
    ++e.violations;
    if (e.witnesses.size() < kWitnessCap)
      e.witnesses.push_back(ClaimWitness{canonical_graph6(g), std::move(verts), std::move(note)});
    else
      e.witnesses_truncated = true;
  }
};

void claims_absorb(ClaimsPartial& cp, const Graph& g) {
  Graph g2 = distance2_graph(g);
  bool tfree = !find_triangle(g2).has_value();
  int diam = diameter(g);

  if (tfree) {
    ClaimEntry& e = cp.claims[Claim::lemma_2_1];
    ++e.graphs_tested;
    if (auto w = find_induced_claw(g)) {
      cp.witness(Claim::lemma_2_1, g, w->vertices, "induced claw");
    } else if (auto w6 = find_induced_c6_variant(g, C6Variant::c6)) {
      cp.witness(Claim::lemma_2_1, g, w6->vertices, "induced C6");
    } else if (auto w6p = find_induced_c6_variant(g, C6Variant::c6p)) {
      cp.witness(Claim::lemma_2_1, g, w6p->vertices, "induced C6+chord");
    } else if (auto w6pp = find_induced_c6_variant(g, C6Variant::c6pp)) {
      cp.witness(Claim::lemma_2_1, g, w6pp->vertices, "induced C6+two chords");
    }
  }

  if (!find_induced_claw(g) && stability_number(g) >= 3) {
    Lemma22Report rep = check_lemma_2_2(g);
    ClaimEntry& e = cp.claims[Claim::lemma_2_2];
    ++e.graphs_tested;
    e.both_count += rep.both_count;
    if (rep.neither_count > 0) {
      int v = 0;
      while (rep.tags[v] != NbhdTag::neither) ++v;
      cp.witness(Claim::lemma_2_2, g, {v}, "neighborhood fits neither alternative");
    }
  }

  if (diam == 2 && tfree) {
    ClaimEntry& e = cp.claims[Claim::obs_2_1];
    ++e.graphs_tested;
    if (auto v = check_observation_2_1(g))
      cp.witness(Claim::obs_2_1, g, {v->v, v->x, v->y}, "N^2(v) not a clique");
  }

  if (diam >= 3 && tfree) {
    Spindle s = find_spindle(g);
    Graph moved = move_vd(g, s);
    Graph moved2 = distance2_graph(moved);
    int before = g2.edge_count(), after = moved2.edge_count();
    ClaimEntry& mono = cp.claims[Claim::lemma_2_3_monotone];
    ++mono.graphs_tested;
    if (after < before)
      cp.witness(Claim::lemma_2_3_monotone, g, s.path,
                 "pairs fell " + std::to_string(before) + "->" + std::to_string(after));
    ClaimEntry& pres = cp.claims[Claim::move_preserves_tfree];
    ++pres.graphs_tested;
    if (find_triangle(moved2).has_value())
      cp.witness(Claim::move_preserves_tfree, g, s.path, "moved graph has a G_2 triangle");
  }

  if (diam == 2 && tfree) {
    bool any_instance = false;
    int failed_v = -1;
    for (int v = 0; v < g.order() && failed_v < 0; ++v) {
      auto cover = two_clique_cover(g, v);
      if (!cover || cover->a.empty() || cover->b.empty()) continue;
      bool cross = false;
      for (int x : cover->a)
        if (g.row(x) & cover->b.bits) cross = true;
      if (!cross) continue;
      if (subcase_2_2_basis(g, v).empty()) continue;
      any_instance = true;
      if (!find_split_subcase_2_2(g, v)) failed_v = v;
    }
    if (any_instance) {
      ClaimEntry& e = cp.claims[Claim::subcase_2_2_split_exists];
      ++e.graphs_tested;
      if (failed_v >= 0)
        cp.witness(Claim::subcase_2_2_split_exists, g, {failed_v},
                   "no split keeps the pair count");
    }
  }
}

void claims_merge(ClaimsPartial& into, const ClaimsPartial& from) {
  for (Claim c : kAllClaims) {
    ClaimEntry& a = into.claims[c];
    const ClaimEntry& b = from.claims.at(c);
    a.graphs_tested += b.graphs_tested;
    a.violations += b.violations;
    a.both_count += b.both_count;
    for (const ClaimWitness& w : b.witnesses) {
      if (a.witnesses.size() < kWitnessCap)
        a.witnesses.push_back(w);
      else
        a.witnesses_truncated = true;
    }
    a.witnesses_truncated = a.witnesses_truncated || b.witnesses_truncated;
  }
}

}  // namespace

ClaimReport check_lemma_claims(int n, int workers) {
  auto t0 = std::chrono::steady_clock::now();
  if (n < 1) fail(Errc::invalid_input, "n must be positive");
  if (n > 9) fail(Errc::cap_exceeded, "claim sweep capped at n=9");
  workers = std::max(1, workers);

  int seed_order = 0;
  if (workers > 1 && n >= 3) {
    for (int d = 2; d <= std::min(7, n - 1); ++d) {
      seed_order = d;
      if (kConnClasses[d] >= 8ULL * workers) break;
    }
  }

  ClaimsPartial total;
  if (seed_order == 0) {
    enumerate_connected(n, [&](const Graph& g) { claims_absorb(total, g); });
  } else {
    std::vector<Graph> seeds = connected_seeds(seed_order);
    std::vector<ClaimsPartial> partials(seeds.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= seeds.size()) return;
        expand_connected(seeds[i], n,
                         [&](const Graph& g) { claims_absorb(partials[i], g); });
      }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const ClaimsPartial& p : partials) claims_merge(total, p);
  }

  ClaimReport rep;
  rep.n = n;
  rep.claims = std::move(total.claims);
  rep.worker_count = workers;
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

bool feasible(const Graph& g) {
  if (!is_connected(g)) return false;
  const kernels::Ops& ops = kernels::active_ops();
  uint64_t d2[kMaxVertices];
  ops.distance2(g.rows(), g.order(), d2);
  return !ops.has_triangle(d2, g.order());
}

int pairs2(const Graph& g) {
  const kernels::Ops& ops = kernels::active_ops();
  uint64_t d2[kMaxVertices];
  ops.distance2(g.rows(), g.order(), d2);
  return static_cast<int>(ops.popcount_sum(d2, g.order()) / 2);
}

Graph anneal_start(int n) {
  if (n >= 5) {
    int x = (n - 2) / 2;  // x + y = n - 3, x >= y >= 1
    return build_family_gpp(FamilyParams{x, n - 3 - x});
  }
  return make_path(n);
}

// A visited feasible state: admissible by construction.
void absorb_state(Partial& p, const Graph& g, int e) {
  ++p.admissible;
  if (e > p.max_pairs) {
    p.max_pairs = e;
    p.certs.clear();
    p.certs_truncated = false;
  }
  if (e == p.max_pairs) insert_cert(p.certs, p.certs_truncated, canonical_graph6(g));
  if (e > p.hyp_max && theorem_hypothesis_holds(g)) p.hyp_max = e;
}

}  // namespace

SearchReport anneal_search(int n, const AnnealOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  if (n < 1 || n > kMaxVertices) fail(Errc::cap_exceeded, "n out of range [1,64]");
  Partial total;  // seen = proposals evaluated, admissible = feasible states visited
  int pair_slots = n * (n - 1) / 2;
  const double t_start = 2.0, t_end = 0.05;
  for (int restart = 0; restart < std::max(1, opt.restarts); ++restart) {
    std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ULL + restart);
    Graph cur = anneal_start(n);
    int cur_e = pairs2(cur);
    absorb_state(total, cur, cur_e);
    if (pair_slots == 0 || opt.steps == 0) continue;
    double alpha = std::pow(t_end / t_start, 1.0 / static_cast<double>(opt.steps));
    double temp = t_start;
    for (uint64_t step = 0; step < opt.steps; ++step, temp *= alpha) {
      ++total.seen;
      int r = static_cast<int>(rng() % pair_slots);
      int i = 0;
      while (r >= n - 1 - i) r -= n - 1 - i, ++i;
      int j = i + 1 + r;
      Graph cand = cur;
      if (cand.has_edge(i, j))
        cand.remove_edge(i, j);
      else
        cand.add_edge(i, j);
      if (!feasible(cand)) continue;
      int cand_e = pairs2(cand);
      int delta = cand_e - cur_e;
      bool take = delta >= 0;
      if (!take) {
        double u = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
        take = std::exp(delta / temp) > u;
      }
      if (!take) continue;
      cur = cand;
      cur_e = cand_e;
      absorb_state(total, cur, cur_e);
    }
  }
  SearchReport rep = finish(total, n, SearchMode::anneal, false);
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace dist2
