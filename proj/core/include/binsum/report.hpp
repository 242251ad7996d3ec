#pragma once

#include <string>
#include <utility>
#include <vector>

#include "binsum/engine.hpp"
#include "binsum/identities.hpp"

namespace binsum {

// Deterministic serialization of verification results. Identical inputs
// produce byte-identical output; timings are the only nondeterministic
// field and are zeroed when include_timing is off. Big integers are
// serialized as decimal strings, rationals as canonical "num/den".

enum class Format { Text, Json, Csv };

bool parse_format(const std::string& token, Format& out);

struct ReportOptions {
  Format format = Format::Text;
  bool include_timing = true;
};

struct TableReport {
  std::string name;                            // "a", "b", "bernoulli", "euler"
  std::vector<std::string> headers;            // first column is the index
  std::vector<std::vector<std::string>> rows;
};

struct EvalReport {
  std::string seq;
  std::vector<std::pair<std::string, long>> params;
  std::string weight;  // empty unless a weighted prefix sum
  std::vector<std::pair<std::string, std::string>> values;  // label -> value
};

// point_logs, when given, must be parallel to reports; CSV output needs it
// to emit one row per parameter point.
std::string render_verifications(const std::vector<VerificationReport>& reports,
                                 const std::vector<std::vector<PointResult>>* point_logs,
                                 bool single_object, const ReportOptions& opts);

std::string render_identities(const std::vector<IdentityCheck>& checks, bool single_object,
                              const ReportOptions& opts);

std::string render_tables(const std::vector<TableReport>& tables, bool single_object,
                          const ReportOptions& opts);

std::string render_eval(const EvalReport& eval, const ReportOptions& opts);

std::string render_all(const std::vector<TableReport>& tables,
                       const std::vector<IdentityCheck>& identities,
                       const std::vector<VerificationReport>& claims,
                       const std::vector<std::vector<PointResult>>* claim_logs,
                       const ReportOptions& opts);

std::string params_to_string(const ParamPoint& params, char separator);

}  // namespace binsum
