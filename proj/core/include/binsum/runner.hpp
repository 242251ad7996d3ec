#pragma once

#include <optional>
#include <string>

#include "binsum/report.hpp"

namespace binsum {

// Command dispatch behind the CLI. Kept out of the binary so the exit-code
// and output contracts are unit-testable.

enum class Command { Eval, Identity, Verify, Table, All };

struct RunConfig {
  Command command = Command::Verify;
  std::string claim_id;     // verify: a claim id or "all"
  std::string identity_id;  // identity: an identity id or "all"
  std::string seq;          // eval: S | T | R | power-odd | power-odd-alt | u
  std::string constants;    // table: a | b | bernoulli | euler
  std::optional<long> n;    // eval: term index (u: the ambient n)
  std::optional<long> j;    // eval: u-term index
  long r = 1;               // eval: exponent parameter
  std::string weight = "none";  // eval prefix weight: none | k | 4k
  std::optional<long> n_max;
  std::optional<long> r_max;
  std::optional<long> p_max;
  std::optional<long> m_max;
  std::optional<long> x_min;
  std::optional<long> x_max;
  int jobs = 1;
  Format format = Format::Text;
  bool strict_conjectures = false;
  bool include_timing = true;
  std::string output_path;  // empty: stdout
};

// 0: all checks pass. 1: a mathematical failure was found (theorem- or
// lemma-kind claim, identity sweep, or conjecture under strict mode).
// 2: usage/configuration/I-O error, reported on stderr.
int run(const RunConfig& config);

// Exit-code policy for a set of claim reports.
int exit_code_for(const std::vector<VerificationReport>& reports, bool strict_conjectures);

}  // namespace binsum
