#pragma once

#include <string>

#include "json.hpp"

#include "dist2/graph.hpp"
#include "dist2/searchlab.hpp"

namespace dist2 {

using OrderedJson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

OrderedJson search_report_json(const SearchReport& rep);
OrderedJson claim_report_json(const ClaimReport& rep);

// Envelope with fixed key order. Timestamps honor SOURCE_DATE_EPOCH (UTC,
// ISO-8601) and default to the epoch so identical inputs serialize to
// identical bytes; wall time and worker counts stay out of documents for the
// same reason.
OrderedJson report_document(const std::string& command, OrderedJson parameters,
                            OrderedJson payload);

std::string render_document(const OrderedJson& doc);  // 2-space indent + newline
void write_report(const OrderedJson& doc, const std::string& path);

std::string dot_export(const Graph& g, const std::string& name);

}  // namespace dist2
