#include "binsum/runner.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "binsum/binomial.hpp"
#include "binsum/sequences.hpp"
#include "binsum/special_numbers.hpp"

namespace binsum {
namespace {

SweepRanges make_ranges(const RunConfig& config) {
  SweepRanges ranges;
  ranges.n_max = config.n_max.value_or(ranges.n_max);
  ranges.r_max = config.r_max.value_or(ranges.r_max);
  ranges.p_max = config.p_max.value_or(ranges.p_max);
  return ranges;
}

IdentityRanges make_identity_ranges(const RunConfig& config) {
  IdentityRanges ranges;
  ranges.n_max = config.n_max;
  ranges.m_max = config.m_max;
  ranges.x_min = config.x_min;
  ranges.x_max = config.x_max;
  ranges.r_max = config.r_max;
  ranges.p_max = config.p_max;
  return ranges;
}

void check_positive(const std::optional<long>& bound, const char* name) {
  if (bound && *bound < 1) {
    throw std::invalid_argument(std::string(name) + " must be positive");
  }
}

void validate_common(const RunConfig& config) {
  if (config.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
  check_positive(config.n_max, "--n-max");
  check_positive(config.r_max, "--r-max");
  check_positive(config.p_max, "--p-max");
  check_positive(config.m_max, "--m-max");
}

std::string integer_or_rational_string(const Rational& value) {
  return value.is_integer() ? value.to_integer().to_string() : value.to_string();
}

int run_verify(const RunConfig& config, std::string& out) {
  std::vector<const CongruenceClaim*> claims;
  if (config.claim_id == "all") {
    for (const auto& claim : claim_registry()) claims.push_back(&claim);
  } else {
    const CongruenceClaim* claim = find_claim(config.claim_id);
    if (claim == nullptr) {
      throw std::invalid_argument("unknown claim id: " + config.claim_id);
    }
    claims.push_back(claim);
  }
  const SweepRanges ranges = make_ranges(config);
  const bool want_log = config.format == Format::Csv;
  std::vector<VerificationReport> reports;
  std::vector<std::vector<PointResult>> logs;
  for (const CongruenceClaim* claim : claims) {
    std::vector<PointResult> log;
    reports.push_back(verify_claim(*claim, ranges, config.jobs, want_log ? &log : nullptr));
    if (want_log) logs.push_back(std::move(log));
  }
  ReportOptions opts{config.format, config.include_timing};
  out = render_verifications(reports, want_log ? &logs : nullptr, config.claim_id != "all",
                             opts);
  return exit_code_for(reports, config.strict_conjectures);
}

int run_identity(const RunConfig& config, std::string& out) {
  std::vector<std::string> ids;
  if (config.identity_id == "all") {
    ids = identity_ids();
  } else {
    if (!is_identity_id(config.identity_id)) {
      throw std::invalid_argument("unknown identity id: " + config.identity_id);
    }
    ids.push_back(config.identity_id);
  }
  const IdentityRanges ranges = make_identity_ranges(config);
  std::vector<IdentityCheck> checks;
  for (const auto& id : ids) checks.push_back(sweep_identity(id, ranges, config.jobs));
  ReportOptions opts{config.format, config.include_timing};
  out = render_identities(checks, config.identity_id != "all", opts);
  for (const auto& check : checks) {
    if (!check.pass) return 1;
  }
  return 0;
}

TableReport make_a_table(long r_max) {
  TableReport t{"a", {"r", "a_r"}, {}};
  for (long r = 1; r <= r_max; ++r) {
    t.rows.push_back({std::to_string(2 * r - 1), a_constant(r).to_string()});
  }
  return t;
}

TableReport make_b_table(long r_max) {
  TableReport t{"b", {"r", "b_r"}, {}};
  for (long r = 1; r <= r_max; ++r) {
    t.rows.push_back({std::to_string(r), b_constant(r).to_string()});
  }
  return t;
}

TableReport make_bernoulli_table(long m_max) {
  TableReport t{"bernoulli", {"m", "B_m", "U_m", "V_m"}, {}};
  for (long m = 0; m <= m_max; ++m) {
    const BernoulliEntry& b = bernoulli(m);
    t.rows.push_back({std::to_string(m), b.value.to_string(), b.numerator.to_string(),
                      b.denominator.to_string()});
  }
  return t;
}

TableReport make_euler_table(long n_max) {
  TableReport t{"euler", {"n", "E_n"}, {}};
  for (long n = 0; n <= n_max; ++n) {
    t.rows.push_back({std::to_string(n), euler_number(n).to_string()});
  }
  return t;
}

int run_table(const RunConfig& config, std::string& out) {
  std::vector<TableReport> tables;
  if (config.constants == "a") {
    tables.push_back(make_a_table(config.r_max.value_or(8)));
  } else if (config.constants == "b") {
    tables.push_back(make_b_table(config.r_max.value_or(8)));
  } else if (config.constants == "bernoulli") {
    tables.push_back(make_bernoulli_table(config.r_max.value_or(14)));
  } else if (config.constants == "euler") {
    tables.push_back(make_euler_table(config.r_max.value_or(14)));
  } else {
    throw std::invalid_argument("unknown constants table: " + config.constants +
                                " (expected a, b, bernoulli, or euler)");
  }
  ReportOptions opts{config.format, config.include_timing};
  out = render_tables(tables, true, opts);
  return 0;
}

int run_eval(const RunConfig& config, std::string& out) {
  if (config.seq == "power-sum") {
    // S_m(n) = 1^m + ... + (n-1)^m with m passed as --r; backs the
    // re-derivation of lemma5.1 report values.
    if (!config.n) throw std::invalid_argument("eval --seq power-sum requires --n");
    EvalReport eval;
    eval.seq = "power-sum";
    eval.params = {{"m", config.r}, {"n", *config.n}};
    eval.values = {{"value", power_sum(config.r, *config.n).to_string()}};
    ReportOptions opts{config.format, config.include_timing};
    out = render_eval(eval, opts);
    return 0;
  }
  Family family;
  if (!parse_family(config.seq, family)) {
    throw std::invalid_argument("unknown sequence family: " + config.seq);
  }
  Weight weight;
  if (!parse_weight(config.weight, weight)) {
    throw std::invalid_argument("unknown weight: " + config.weight);
  }
  EvalReport eval;
  eval.seq = family_name(family);

  const bool uses_r =
      family == Family::S || family == Family::T || family == Family::PowerOdd ||
      family == Family::PowerOddAlt;

  if (family == Family::UTerm) {
    if (!config.n) throw std::invalid_argument("eval --seq u requires --n (the ambient n)");
    const long ambient = *config.n;
    if (config.j) {
      eval.params = {{"n", ambient}, {"j", *config.j}};
      eval.values = {{"value", u_term(ambient, *config.j).to_string()}};
    } else {
      eval.params = {{"n", ambient}};
      if (ambient < 1) throw std::invalid_argument("eval --seq u requires --n >= 1");
      for (long j = 0; j < ambient; ++j) {
        eval.values.push_back({"u[" + std::to_string(j) + "]", u_term(ambient, j).to_string()});
      }
    }
  } else if (config.n) {
    if (config.n_max) {
      throw std::invalid_argument("eval takes --n (term) or --n-max (prefix sum), not both");
    }
    SequenceSpec spec{family, config.r, 0};
    if (uses_r) eval.params.push_back({"r", config.r});
    eval.params.push_back({"n", *config.n});
    eval.values = {{"value", integer_or_rational_string(term(spec, *config.n))}};
  } else if (config.n_max) {
    SequenceSpec spec{family, config.r, 0};
    if (uses_r) eval.params.push_back({"r", config.r});
    eval.params.push_back({"n_max", *config.n_max});
    if (weight != Weight::None) eval.weight = weight_name(weight);
    eval.values = {{"value", integer_or_rational_string(prefix_sum(spec, *config.n_max, weight))}};
  } else {
    throw std::invalid_argument("eval requires --n (term) or --n-max (prefix sum)");
  }

  ReportOptions opts{config.format, config.include_timing};
  out = render_eval(eval, opts);
  return 0;
}

int run_all(const RunConfig& config, std::string& out) {
  std::vector<TableReport> tables;
  tables.push_back(make_a_table(config.r_max.value_or(8)));
  tables.push_back(make_b_table(config.r_max.value_or(8)));

  const IdentityRanges identity_ranges = make_identity_ranges(config);
  std::vector<IdentityCheck> checks;
  for (const auto& id : identity_ids()) {
    checks.push_back(sweep_identity(id, identity_ranges, config.jobs));
  }

  const SweepRanges ranges = make_ranges(config);
  const bool want_log = config.format == Format::Csv;
  std::vector<VerificationReport> reports;
  std::vector<std::vector<PointResult>> logs;
  for (const auto& claim : claim_registry()) {
    std::vector<PointResult> log;
    reports.push_back(verify_claim(claim, ranges, config.jobs, want_log ? &log : nullptr));
    if (want_log) logs.push_back(std::move(log));
  }

  ReportOptions opts{config.format, config.include_timing};
  out = render_all(tables, checks, reports, want_log ? &logs : nullptr, opts);

  int code = exit_code_for(reports, config.strict_conjectures);
  for (const auto& check : checks) {
    if (!check.pass) code = std::max(code, 1);
  }
  return code;
}

int dispatch(const RunConfig& config, std::string& out) {
  switch (config.command) {
    case Command::Eval: return run_eval(config, out);
    case Command::Identity: return run_identity(config, out);
    case Command::Verify: return run_verify(config, out);
    case Command::Table: return run_table(config, out);
    case Command::All: return run_all(config, out);
  }
  throw std::invalid_argument("unknown command");
}

}  // namespace

int exit_code_for(const std::vector<VerificationReport>& reports, bool strict_conjectures) {
  bool proven_failure = false;
  bool conjecture_failure = false;
  for (const auto& report : reports) {
    if (report.pass()) continue;
    if (report.kind == ClaimKind::Conjecture) {
      conjecture_failure = true;
    } else {
      proven_failure = true;
    }
  }
  if (proven_failure) return 1;
  if (conjecture_failure && strict_conjectures) return 1;
  return 0;
}

int run(const RunConfig& config) {
  try {
    validate_common(config);
    std::string out;
    const int code = dispatch(config, out);
    if (config.output_path.empty()) {
      std::cout << out;
      std::cout.flush();
    } else {
      std::ofstream file(config.output_path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open output file: " << config.output_path << "\n";
        return 2;
      }
      file << out;
      file.flush();
      if (!file) {
        std::cerr << "error: failed writing output file: " << config.output_path << "\n";
        return 2;
      }
    }
    return code;
  } catch (const arithmetic_error& e) {
    std::cerr << "arithmetic error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace binsum
