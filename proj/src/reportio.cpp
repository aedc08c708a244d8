#include "dist2/reportio.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>

namespace dist2 {
namespace {

const char* mode_name(SearchMode m) {
  switch (m) {
    case SearchMode::exhaustive: return "EXHAUSTIVE";
    case SearchMode::stream: return "STREAM";
    case SearchMode::anneal: return "ANNEAL";
  }
  return "?";
}

std::string timestamp() {
  long long epoch = 0;
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) epoch = std::atoll(env);
  std::time_t t = static_cast<std::time_t>(epoch);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

OrderedJson search_report_json(const SearchReport& rep) {
  OrderedJson j;
  j["n"] = rep.n;
  j["mode"] = mode_name(rep.mode);
  j["diam2_only"] = rep.diam2_only;
  j["graphs_seen"] = rep.graphs_seen;
  j["graphs_admissible"] = rep.graphs_admissible;
  j["max_pairs"] = rep.max_pairs;
  j["bound_value"] = rep.bound;
  j["bound_form"] = "floor((n-1)^2/4) + 1";
  j["bound_holds"] = rep.bound_holds;
  j["hypothesis_max_pairs"] = rep.hypothesis_max_pairs;
  j["extremal_certs"] = rep.extremal_certs;
  j["extremal_certs_truncated"] = rep.certs_truncated;
  return j;
}

OrderedJson claim_report_json(const ClaimReport& rep) {
  OrderedJson j;
  j["n"] = rep.n;
  OrderedJson claims;
  for (const auto& [claim, entry] : rep.claims) {
    OrderedJson e;
    e["graphs_tested"] = entry.graphs_tested;
    e["violations"] = entry.violations;
    e["measured_only"] = claim_is_measured_only(claim);
    if (claim == Claim::lemma_2_2) e["both_count"] = entry.both_count;
    OrderedJson ws = OrderedJson::array();
    for (const ClaimWitness& w : entry.witnesses) {
      OrderedJson wj;
      wj["g6"] = w.g6;
      wj["vertices"] = w.vertices;
      wj["note"] = w.note;
      ws.push_back(std::move(wj));
    }
    e["witnesses"] = std::move(ws);
    e["witnesses_truncated"] = entry.witnesses_truncated;
    claims[claim_name(claim)] = std::move(e);
  }
  j["claims"] = std::move(claims);
  return j;
}

OrderedJson report_document(const std::string& command, OrderedJson parameters,
                            OrderedJson payload) {
  OrderedJson doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = "dist2lab";
  doc["tool_version"] = kToolVersion;
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  doc["timestamp"] = timestamp();
  doc["report"] = std::move(payload);
  return doc;
}

std::string render_document(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

void write_report(const OrderedJson& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open " + path);
  out << render_document(doc);
  if (!out) fail(Errc::io_error, "write failed for " + path);
}

std::string dot_export(const Graph& g, const std::string& name) {
  std::string esc;
  for (char c : name) {
    if (c == '"' || c == '\\') esc.push_back('\\');
    esc.push_back(c);
  }
  std::string out = "graph \"" + esc + "\" {\n";
  for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (int v = 0; v < g.order(); ++v)
    for (int u : VertexSet(g.row(v)))
      if (u > v) out += "  " + std::to_string(v) + " -- " + std::to_string(u) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace dist2
