#include "binsum/report.hpp"

#include <sstream>

#include "json.hpp"

namespace binsum {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json params_to_json(const ParamPoint& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, value] : params) j[name] = value;
  return j;
}

ordered_json verification_to_json(const VerificationReport& r, bool timing) {
  ordered_json j;
  j["claim"] = r.claim;
  j["kind"] = claim_kind_name(r.kind);
  j["ranges"] = r.ranges;
  j["points"] = r.points;
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures) {
    ordered_json jf;
    jf["params"] = params_to_json(f.params);
    jf["value"] = f.value;
    jf["modulus"] = f.modulus;
    jf["residue"] = f.residue;
    failures.push_back(std::move(jf));
  }
  j["failures"] = std::move(failures);
  j["elapsed_ms"] = timing ? r.elapsed_ms : 0;
  return j;
}

ordered_json identity_to_json(const IdentityCheck& c, bool timing) {
  ordered_json j;
  j["identity"] = c.id;
  j["domain"] = c.domain;
  j["points"] = c.points;
  j["pass"] = c.pass;
  if (c.pass) {
    j["failure"] = nullptr;
  } else {
    ordered_json f;
    f["params"] = params_to_json(c.failure_point);
    f["lhs"] = c.failure_lhs;
    f["rhs"] = c.failure_rhs;
    j["failure"] = std::move(f);
  }
  j["elapsed_ms"] = timing ? c.elapsed_ms : 0;
  return j;
}

ordered_json table_to_json(const TableReport& t) {
  ordered_json j;
  j["table"] = t.name;
  j["headers"] = t.headers;
  j["rows"] = t.rows;
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string timing_suffix(std::int64_t elapsed_ms, bool timing) {
  if (!timing) return "";
  return " [" + std::to_string(elapsed_ms) + " ms]";
}

void verification_text(std::ostream& os, const VerificationReport& r, bool timing) {
  const long passed = r.points - static_cast<long>(r.failures.size());
  os << r.claim << " [" << claim_kind_name(r.kind) << "]: " << passed << "/" << r.points
     << " points " << (r.pass() ? "PASS" : "FAIL") << " (" << r.ranges << ")"
     << timing_suffix(r.elapsed_ms, timing) << "\n";
  const char* label = r.kind == ClaimKind::Conjecture ? "FINDING" : "FAIL";
  for (const auto& f : r.failures) {
    os << "  " << label << " " << params_to_string(f.params, ',') << ": value=" << f.value
       << " modulus=" << f.modulus << " residue=" << f.residue << "\n";
  }
}

void identity_text(std::ostream& os, const IdentityCheck& c, bool timing) {
  os << c.id << ": " << c.points << " points " << (c.pass ? "PASS" : "FAIL") << " (" << c.domain
     << ")" << timing_suffix(c.elapsed_ms, timing) << "\n";
  if (!c.pass) {
    os << "  FAIL " << params_to_string(c.failure_point, ',') << ": lhs=" << c.failure_lhs
       << " rhs=" << c.failure_rhs << "\n";
  }
}

void table_text(std::ostream& os, const TableReport& t) {
  if (t.headers.size() == 2) {
    // Short constant tables print as one row of name_index=value.
    bool first = true;
    for (const auto& row : t.rows) {
      if (!first) os << " ";
      os << t.name << "_" << row[0] << "=" << row[1];
      first = false;
    }
    os << "\n";
    return;
  }
  for (const auto& row : t.rows) {
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (i > 1) os << " ";
      os << t.headers[i] << "=" << row[i];
    }
    os << "\n";
  }
}

void verification_csv(std::ostream& os, const VerificationReport& r,
                      const std::vector<PointResult>* log, bool with_header) {
  if (with_header) os << "claim,params,value,modulus,residue,status\n";
  if (log != nullptr) {
    for (const auto& p : *log) {
      FailureEntry e = to_failure_entry(p);
      os << r.claim << "," << params_to_string(e.params, ';') << "," << e.value << ","
         << e.modulus << "," << e.residue << "," << (p.pass ? "pass" : "fail") << "\n";
    }
    return;
  }
  for (const auto& f : r.failures) {
    os << r.claim << "," << params_to_string(f.params, ';') << "," << f.value << ","
       << f.modulus << "," << f.residue << ",fail\n";
  }
}

void identity_csv(std::ostream& os, const IdentityCheck& c, bool with_header) {
  if (with_header) os << "identity,points,status,failure_params,lhs,rhs\n";
  os << c.id << "," << c.points << "," << (c.pass ? "pass" : "fail") << ","
     << params_to_string(c.failure_point, ';') << "," << c.failure_lhs << "," << c.failure_rhs
     << "\n";
}

void table_csv(std::ostream& os, const TableReport& t) {
  for (std::size_t i = 0; i < t.headers.size(); ++i) {
    if (i > 0) os << ",";
    os << t.headers[i];
  }
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) os << ",";
      os << row[i];
    }
    os << "\n";
  }
}

}  // namespace

bool parse_format(const std::string& token, Format& out) {
  if (token == "text") out = Format::Text;
  else if (token == "json") out = Format::Json;
  else if (token == "csv") out = Format::Csv;
  else return false;
  return true;
}

std::string params_to_string(const ParamPoint& params, char separator) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : params) {
    if (!first) os << separator;
    os << name << "=" << value;
    first = false;
  }
  return os.str();
}

std::string render_verifications(const std::vector<VerificationReport>& reports,
                                 const std::vector<std::vector<PointResult>>* point_logs,
                                 bool single_object, const ReportOptions& opts) {
  switch (opts.format) {
    case Format::Json: {
      if (single_object && reports.size() == 1) {
        return dump(verification_to_json(reports[0], opts.include_timing));
      }
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(verification_to_json(r, opts.include_timing));
      return dump(arr);
    }
    case Format::Csv: {
      std::ostringstream os;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const std::vector<PointResult>* log =
            point_logs != nullptr && i < point_logs->size() ? &(*point_logs)[i] : nullptr;
        verification_csv(os, reports[i], log, i == 0);
      }
      return os.str();
    }
    case Format::Text: {
      std::ostringstream os;
      long failing = 0;
      for (const auto& r : reports) {
        verification_text(os, r, opts.include_timing);
        if (!r.pass()) ++failing;
      }
      if (reports.size() > 1) {
        os << (reports.size() - static_cast<std::size_t>(failing)) << "/" << reports.size()
           << " claims pass\n";
      }
      return os.str();
    }
  }
  return "";
}

std::string render_identities(const std::vector<IdentityCheck>& checks, bool single_object,
                              const ReportOptions& opts) {
  switch (opts.format) {
    case Format::Json: {
      if (single_object && checks.size() == 1) {
        return dump(identity_to_json(checks[0], opts.include_timing));
      }
      ordered_json arr = ordered_json::array();
      for (const auto& c : checks) arr.push_back(identity_to_json(c, opts.include_timing));
      return dump(arr);
    }
    case Format::Csv: {
      std::ostringstream os;
      for (std::size_t i = 0; i < checks.size(); ++i) identity_csv(os, checks[i], i == 0);
      return os.str();
    }
    case Format::Text: {
      std::ostringstream os;
      long failing = 0;
      for (const auto& c : checks) {
        identity_text(os, c, opts.include_timing);
        if (!c.pass) ++failing;
      }
      if (checks.size() > 1) {
        os << (checks.size() - static_cast<std::size_t>(failing)) << "/" << checks.size()
           << " identities pass\n";
      }
      return os.str();
    }
  }
  return "";
}

std::string render_tables(const std::vector<TableReport>& tables, bool single_object,
                          const ReportOptions& opts) {
  switch (opts.format) {
    case Format::Json: {
      if (single_object && tables.size() == 1) return dump(table_to_json(tables[0]));
      ordered_json arr = ordered_json::array();
      for (const auto& t : tables) arr.push_back(table_to_json(t));
      return dump(arr);
    }
    case Format::Csv: {
      std::ostringstream os;
      for (std::size_t i = 0; i < tables.size(); ++i) {
        if (i > 0) os << "\n";
        table_csv(os, tables[i]);
      }
      return os.str();
    }
    case Format::Text: {
      std::ostringstream os;
      for (const auto& t : tables) table_text(os, t);
      return os.str();
    }
  }
  return "";
}

std::string render_eval(const EvalReport& eval, const ReportOptions& opts) {
  switch (opts.format) {
    case Format::Json: {
      ordered_json j;
      j["seq"] = eval.seq;
      j["params"] = params_to_json(eval.params);
      if (!eval.weight.empty()) j["weight"] = eval.weight;
      ordered_json values = ordered_json::object();
      for (const auto& [label, value] : eval.values) values[label] = value;
      j["values"] = std::move(values);
      return dump(j);
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "seq,params,label,value\n";
      std::string params = params_to_string(eval.params, ';');
      if (!eval.weight.empty()) params += ";weight=" + eval.weight;
      for (const auto& [label, value] : eval.values) {
        os << eval.seq << "," << params << "," << label << "," << value << "\n";
      }
      return os.str();
    }
    case Format::Text: {
      std::ostringstream os;
      if (eval.values.size() == 1 && eval.values[0].first == "value") {
        os << eval.values[0].second << "\n";
      } else {
        for (const auto& [label, value] : eval.values) os << label << " = " << value << "\n";
      }
      return os.str();
    }
  }
  return "";
}

std::string render_all(const std::vector<TableReport>& tables,
                       const std::vector<IdentityCheck>& identities,
                       const std::vector<VerificationReport>& claims,
                       const std::vector<std::vector<PointResult>>* claim_logs,
                       const ReportOptions& opts) {
  switch (opts.format) {
    case Format::Json: {
      ordered_json j;
      ordered_json jt = ordered_json::array();
      for (const auto& t : tables) jt.push_back(table_to_json(t));
      j["tables"] = std::move(jt);
      ordered_json ji = ordered_json::array();
      for (const auto& c : identities) ji.push_back(identity_to_json(c, opts.include_timing));
      j["identities"] = std::move(ji);
      ordered_json jc = ordered_json::array();
      for (const auto& r : claims) jc.push_back(verification_to_json(r, opts.include_timing));
      j["claims"] = std::move(jc);
      return dump(j);
    }
    case Format::Csv:
    case Format::Text: {
      std::ostringstream os;
      const bool text = opts.format == Format::Text;
      if (text) os << "== constants ==\n";
      os << render_tables(tables, false, opts);
      if (text) os << "== identities ==\n";
      else os << "\n";
      os << render_identities(identities, false, opts);
      if (text) os << "== claims ==\n";
      else os << "\n";
      os << render_verifications(claims, claim_logs, false, opts);
      return os.str();
    }
  }
  return "";
}

}  // namespace binsum
