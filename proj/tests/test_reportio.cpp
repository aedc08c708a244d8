#include "dist2/reportio.hpp"

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "dist2/graph6.hpp"

using namespace dist2;

TEST_CASE("search report document shape and key order") {
  SearchReport rep = verify_bound(5);
  rep.wall_time_s = 123.0;  // must not leak into the document
  rep.worker_count = 8;
  OrderedJson params;
  params["n"] = 5;
  params["diam2_only"] = false;
  params["long"] = false;
  params["source"] = "builtin";
  OrderedJson doc = report_document("verify", params, search_report_json(rep));
  std::string text = render_document(doc);
  CHECK(text.find("\"schema_version\": 1") != std::string::npos);
  CHECK(text.find("\"bound_value\": 5") != std::string::npos);
  CHECK(text.find("\"max_pairs\": 5") != std::string::npos);
  CHECK(text.find("wall") == std::string::npos);
  CHECK(text.find("worker") == std::string::npos);
  CHECK(text.back() == '\n');
  // fixed key order: schema_version first, report last
  CHECK(text.find("\"schema_version\"") < text.find("\"command\""));
  CHECK(text.find("\"command\"") < text.find("\"report\""));
}

TEST_CASE("write_report is byte-stable") {
  SearchReport rep = verify_bound(4);
  OrderedJson params;
  params["n"] = 4;
  OrderedJson doc = report_document("verify", params, search_report_json(rep));
  std::string p1 = "/tmp/dist2_report_a.json", p2 = "/tmp/dist2_report_b.json";
  write_report(doc, p1);
  write_report(doc, p2);
  std::ifstream f1(p1, std::ios::binary), f2(p2, std::ios::binary);
  std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
  CHECK(!s1.empty());
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("claim report document") {
  ClaimReport rep = check_lemma_claims(4);
  OrderedJson params;
  params["n"] = 4;
  OrderedJson doc = report_document("claims", params, claim_report_json(rep));
  std::string text = render_document(doc);
  CHECK(text.find("LEMMA_2_1") != std::string::npos);
  CHECK(text.find("MOVE_PRESERVES_TFREE") != std::string::npos);
  CHECK(text.find("\"measured_only\": true") != std::string::npos);
}

TEST_CASE("dot export") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  std::string dot = dot_export(p3, encode_graph6(p3));
  CHECK(dot == "graph \"Bg\" {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
  // quotes and backslashes in names get escaped
  std::string tricky = dot_export(p3, "a\"b\\c");
  CHECK(tricky.find("\"a\\\"b\\\\c\"") != std::string::npos);
}
