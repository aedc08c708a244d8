#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dist2/distgraph.hpp"
#include "dist2/enumerate.hpp"
#include "dist2/families.hpp"
#include "dist2/graph6.hpp"
#include "dist2/kernels.hpp"
#include "dist2/reportio.hpp"
#include "dist2/searchlab.hpp"
#include "dist2/structcheck.hpp"

namespace {

using dist2::OrderedJson;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

int default_jobs() {
  if (const char* env = std::getenv("DIST2_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

void emit(const OrderedJson& doc, const std::string& out_path) {
  std::cout << dist2::render_document(doc);
  if (!out_path.empty()) dist2::write_report(doc, out_path);
}

OrderedJson witness_json(const std::optional<dist2::PatternWitness>& w) {
  if (!w) return nullptr;
  return OrderedJson{{"vertices", w->vertices}};
}

OrderedJson check_one(const dist2::Graph& g, const std::string& g6) {
  OrderedJson j;
  j["g6"] = g6;
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  int diam = dist2::diameter(g);
  j["diameter"] = diam == dist2::kUnreachable ? OrderedJson(nullptr) : OrderedJson(diam);
  dist2::Graph g2 = dist2::distance2_graph(g);
  j["e_g2"] = g2.edge_count();
  j["g2_triangle_free"] = !dist2::find_triangle(g2).has_value();
  j["claw"] = witness_json(dist2::find_induced_claw(g));
  j["c6"] = witness_json(dist2::find_induced_c6_variant(g, dist2::C6Variant::c6));
  j["c6p"] = witness_json(dist2::find_induced_c6_variant(g, dist2::C6Variant::c6p));
  j["c6pp"] = witness_json(dist2::find_induced_c6_variant(g, dist2::C6Variant::c6pp));
  OrderedJson covers = OrderedJson::array();
  for (int v = 0; v < g.order(); ++v) {
    auto cover = dist2::two_clique_cover(g, v);
    if (!cover) {
      covers.push_back(nullptr);
      continue;
    }
    std::vector<int> a, b;
    for (int u : cover->a) a.push_back(u);
    for (int u : cover->b) b.push_back(u);
    covers.push_back(OrderedJson{{"a", a}, {"b", b}});
  }
  j["two_clique_cover"] = std::move(covers);
  auto hyp = dist2::theorem_hypothesis_holds(g);
  j["hypothesis_vertex"] = hyp ? OrderedJson(*hyp) : OrderedJson(nullptr);
  return j;
}

struct VerifyArgs {
  int n = 0;
  bool diam2_only = false;
  int jobs = default_jobs();
  bool long_run = false;
  std::string from_file;
  std::string out_path;
  std::string checkpoint;
};

int run_verify(const VerifyArgs& a) {
  dist2::SearchReport rep;
  OrderedJson params;
  params["n"] = a.n;
  params["diam2_only"] = a.diam2_only;
  params["long"] = a.long_run;
  if (a.from_file.empty()) {
    params["source"] = "builtin";
    dist2::VerifyOptions opt;
    opt.diam2_only = a.diam2_only;
    opt.workers = a.jobs;
    opt.long_run = a.long_run;
    opt.checkpoint_path = a.checkpoint;
    rep = dist2::verify_bound(a.n, opt);
  } else {
    params["source"] = "graph6-stream";
    std::ifstream in(a.from_file);
    if (!in) dist2::fail(dist2::Errc::io_error, "cannot open " + a.from_file);
    rep = dist2::verify_bound_stream(a.n, in, a.diam2_only);
  }
  std::cerr << "verify n=" << a.n << ": " << rep.graphs_seen << " classes, "
            << rep.graphs_admissible << " admissible, " << rep.wall_time_s << "s with "
            << rep.worker_count << " worker(s), kernel=" << dist2::kernels::active_ops().name
            << "\n";
  emit(dist2::report_document("verify", params, dist2::search_report_json(rep)), a.out_path);
  return rep.bound_holds ? kExitOk : kExitViolation;
}

int run_claims(int n, int jobs, const std::string& out_path) {
  dist2::ClaimReport rep = dist2::check_lemma_claims(n, jobs);
  std::cerr << "claims n=" << n << ": " << rep.wall_time_s << "s with " << rep.worker_count
            << " worker(s)\n";
  OrderedJson params;
  params["n"] = n;
  emit(dist2::report_document("claims", params, dist2::claim_report_json(rep)), out_path);
  for (const auto& [claim, entry] : rep.claims)
    if (!dist2::claim_is_measured_only(claim) && entry.violations > 0) return kExitViolation;
  return kExitOk;
}

int run_check(const std::string& g6_arg, const std::string& file) {
  auto one = [](const std::string& line) {
    dist2::Graph g = dist2::decode_graph6(line);
    std::cout << check_one(g, line).dump() << "\n";
  };
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) dist2::fail(dist2::Errc::io_error, "cannot open " + file);
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
      if (line.empty() || line.rfind(">>", 0) == 0) continue;
      one(line);
    }
  } else {
    one(g6_arg);
  }
  return kExitOk;
}

int run_construct(const std::string& family, int x, int y, bool dot) {
  dist2::FamilyParams p{x, y};
  dist2::Graph g = family == "gpp" ? dist2::build_family_gpp(p) : dist2::build_family_gp(p);
  std::string g6 = dist2::encode_graph6(g);
  if (dot)
    std::cout << dist2::dot_export(g, g6);
  else
    std::cout << g6 << "\n";
  return kExitOk;
}

int run_transform_move(const std::string& input, bool trace) {
  dist2::Graph g = dist2::decode_graph6(input);
  if (!trace) {
    dist2::Graph moved = dist2::move_vd(g, dist2::find_spindle(g));
    std::cout << dist2::encode_graph6(moved) << "\n";
    return kExitOk;
  }
  dist2::ReduceResult res = dist2::reduce_to_diameter_2(g);
  OrderedJson j;
  j["input"] = input;
  j["result"] = dist2::encode_graph6(res.graph);
  j["diameter"] = dist2::diameter(res.graph);
  j["pair_trace"] = res.pair_trace;
  j["tfree_trace"] = res.tfree_trace;
  j["cap_exceeded"] = res.cap_exceeded;
  std::cout << j.dump(2) << "\n";
  return res.cap_exceeded ? kExitError : kExitOk;
}

int run_dist_graph(int k, const std::string& input) {
  dist2::Graph g = dist2::decode_graph6(input);
  dist2::DistanceKGraph dk = dist2::distance_k_graph(g, k);
  std::cout << dist2::encode_graph6(dk.graph) << "\n";
  return kExitOk;
}

int run_anneal(int n, uint64_t steps, uint64_t seed, int restarts, const std::string& out_path) {
  dist2::AnnealOptions opt;
  opt.steps = steps;
  opt.seed = seed;
  opt.restarts = restarts;
  dist2::SearchReport rep = dist2::anneal_search(n, opt);
  std::cerr << "anneal n=" << n << ": best " << rep.max_pairs << " in " << rep.wall_time_s
            << "s\n";
  OrderedJson params;
  params["n"] = n;
  params["steps"] = steps;
  params["seed"] = seed;
  params["restarts"] = restarts;
  emit(dist2::report_document("anneal", params, dist2::search_report_json(rep)), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance-2 pair maximization laboratory"};
  app.require_subcommand(1);

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "exhaustively verify the pair-count bound");
  verify->add_option("--n", va.n, "graph order")->required();
  verify->add_flag("--diam2-only", va.diam2_only, "restrict to diameter <= 2 classes");
  verify->add_option("--jobs", va.jobs, "worker threads (default DIST2_JOBS or 1)");
  verify->add_flag("--long", va.long_run, "allow n > 10");
  verify->add_option("--from-file", va.from_file, "graph6 stream instead of enumeration");
  verify->add_option("--out", va.out_path, "write the report document here");
  verify->add_option("--checkpoint", va.checkpoint, "subtree progress file for long runs");

  int cn = 0, cjobs = default_jobs();
  std::string cout_path;
  CLI::App* claims = app.add_subcommand("claims", "sweep the structural claims");
  claims->add_option("--n", cn, "graph order")->required();
  claims->add_option("--jobs", cjobs, "worker threads");
  claims->add_option("--out", cout_path, "write the report document here");

  std::string check_g6, check_file;
  CLI::App* check = app.add_subcommand("check", "analyze single graphs");
  check->add_option("g6", check_g6, "graph6 string");
  check->add_option("--file", check_file, "file with one graph6 per line");

  std::string family;
  int fx = 1, fy = 1;
  bool want_g6 = false, want_dot = false;
  CLI::App* construct = app.add_subcommand("construct", "emit a parametric family graph");
  construct->add_option("--family", family, "gpp or gp")
      ->required()
      ->check(CLI::IsMember({"gpp", "gp"}));
  construct->add_option("--x", fx, "first clique size")->required();
  construct->add_option("--y", fy, "second clique size")->required();
  construct->add_flag("--g6", want_g6, "emit graph6 (default)");
  construct->add_flag("--dot", want_dot, "emit DOT instead");

  CLI::App* transform = app.add_subcommand("transform", "diameter-reducing rewirings");
  transform->require_subcommand(1);
  std::string tin;
  bool ttrace = false;
  CLI::App* tmove = transform->add_subcommand("move", "apply one spindle move");
  tmove->add_option("--input", tin, "graph6 input")->required();
  tmove->add_flag("--trace", ttrace, "iterate to diameter 2 and print the trace");

  int dk = 0;
  std::string din;
  CLI::App* dist = app.add_subcommand("dist-graph", "emit the distance-k graph");
  dist->add_option("--k", dk, "distance")->required()->check(CLI::PositiveNumber);
  dist->add_option("--input", din, "graph6 input")->required();

  int an = 0, arestarts = 1;
  uint64_t asteps = 10000, aseed = 1;
  std::string aout;
  CLI::App* anneal = app.add_subcommand("anneal", "stochastic lower-bound probe");
  anneal->add_option("--n", an, "graph order")->required();
  anneal->add_option("--steps", asteps, "proposals per restart");
  anneal->add_option("--seed", aseed, "RNG seed");
  anneal->add_option("--restarts", arestarts, "independent restarts");
  anneal->add_option("--out", aout, "write the report document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify(va);
    if (*claims) return run_claims(cn, cjobs, cout_path);
    if (*check) {
      if (check_g6.empty() && check_file.empty()) {
        std::cerr << "check: need a graph6 argument or --file\n";
        return kExitUsage;
      }
      return run_check(check_g6, check_file);
    }
    if (*construct) return run_construct(family, fx, fy, want_dot && !want_g6);
    if (*transform) return run_transform_move(tin, ttrace);
    if (*dist) return run_dist_graph(dk, din);
    if (*anneal) return run_anneal(an, asteps, aseed, arestarts, aout);
  } catch (const dist2::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case dist2::Errc::bad_char:
      case dist2::Errc::bad_length:
      case dist2::Errc::bad_padding:
        return kExitParse;
      default:
        return kExitError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
