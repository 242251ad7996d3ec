// binsum: evaluate binomial-sum sequences, verify the combinatorial
// identities behind them, and sweep the registered congruence claims over
// configurable ranges.

#include <string>

#include "CLI11.hpp"
#include "binsum/runner.hpp"

namespace {

struct CliOptions {
  binsum::RunConfig config;
  std::string format = "text";
  long n = -1;
  long j = -1;
  long n_max = -1;
  long r_max = -1;
  long p_max = -1;
  long m_max = -1;
  long x_min = 0;
  long x_max = 0;
  bool has_x_min = false;
  bool has_x_max = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opts) {
  cmd->add_option("--n-max", opts.n_max, "Upper bound for n sweeps");
  cmd->add_option("--r-max", opts.r_max, "Upper bound for the exponent parameter r");
  cmd->add_option("--p-max", opts.p_max, "Upper bound for prime sweeps");
  cmd->add_option("--m-max", opts.m_max, "Upper bound for m in identity sweeps");
  cmd->add_option("--x-min", opts.x_min, "Lower bound for the free variable x")
      ->each([&opts](const std::string&) { opts.has_x_min = true; });
  cmd->add_option("--x-max", opts.x_max, "Upper bound for the free variable x")
      ->each([&opts](const std::string&) { opts.has_x_max = true; });
  cmd->add_option("--jobs", opts.config.jobs, "Worker thread count (default 1)");
  cmd->add_option("--format", opts.format, "Output format: text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_flag("--strict-conjectures", opts.config.strict_conjectures,
                "Conjecture failures also fail the exit code");
  cmd->add_flag_function(
      "--no-timing",
      [&opts](std::int64_t) { opts.config.include_timing = false; },
      "Zero out elapsed_ms fields for byte-reproducible reports");
  cmd->add_option("--output", opts.config.output_path, "Write the report to a file");
}

void fill_config(CliOptions& opts) {
  if (opts.n >= 0) opts.config.n = opts.n;
  if (opts.j >= 0) opts.config.j = opts.j;
  if (opts.n_max >= 0) opts.config.n_max = opts.n_max;
  if (opts.r_max >= 0) opts.config.r_max = opts.r_max;
  if (opts.p_max >= 0) opts.config.p_max = opts.p_max;
  if (opts.m_max >= 0) opts.config.m_max = opts.m_max;
  if (opts.has_x_min) opts.config.x_min = opts.x_min;
  if (opts.has_x_max) opts.config.x_max = opts.x_max;
  binsum::parse_format(opts.format, opts.config.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification of binomial-sum congruences: sequence evaluation, "
      "identity sweeps, claim sweeps, and constant tables"};
  app.require_subcommand(1);

  CliOptions opts;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a sequence term or prefix sum");
  eval->add_option("--seq", opts.config.seq,
                   "Sequence family: S, T, R, power-odd, power-odd-alt, u, power-sum")
      ->required();
  eval->add_option("--r", opts.config.r, "Exponent parameter r (default 1)");
  eval->add_option("--n", opts.n, "Term index (for u: the ambient n)");
  eval->add_option("--j", opts.j, "u-term index j (with --seq u)");
  eval->add_option("--weight", opts.config.weight, "Prefix weight: none, k, or 4k")
      ->check(CLI::IsMember({"none", "k", "4k"}));
  add_common_flags(eval, opts);

  CLI::App* identity = app.add_subcommand("identity", "Sweep a combinatorial identity");
  identity->add_option("--identity", opts.config.identity_id, "Identity id, or 'all'")
      ->required();
  add_common_flags(identity, opts);

  CLI::App* verify = app.add_subcommand("verify", "Sweep a registered congruence claim");
  verify->add_option("--claim", opts.config.claim_id, "Claim id, or 'all'")->required();
  add_common_flags(verify, opts);

  CLI::App* table = app.add_subcommand("table", "Print a constants table");
  table->add_option("--constants", opts.config.constants, "Table: a, b, bernoulli, or euler")
      ->required();
  add_common_flags(table, opts);

  CLI::App* all = app.add_subcommand("all", "Tables, every identity, and every claim");
  add_common_flags(all, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (eval->parsed()) opts.config.command = binsum::Command::Eval;
  if (identity->parsed()) opts.config.command = binsum::Command::Identity;
  if (verify->parsed()) opts.config.command = binsum::Command::Verify;
  if (table->parsed()) opts.config.command = binsum::Command::Table;
  if (all->parsed()) opts.config.command = binsum::Command::All;
  fill_config(opts);

  return binsum::run(opts.config);
}
