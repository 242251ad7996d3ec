#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef BINSUM_CLI_PATH
#error "BINSUM_CLI_PATH must point at the binsum binary"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args, const std::string& tag) {
  const std::string out_path = "cli_" + tag + ".out";
  const std::string cmd =
      std::string(BINSUM_CLI_PATH) + " " + args + " > " + out_path + " 2> cli_stderr.tmp";
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  std::remove(out_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("eval prints the bare term value") {
  auto r = run_cli("eval --seq S --r 2 --n 3", "eval_s");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2493\n");
}

TEST_CASE("eval handles the rational family") {
  auto r = run_cli("eval --seq R --n 2", "eval_r");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "7\n");
}

TEST_CASE("eval prints a u-term row") {
  auto r = run_cli("eval --seq u --n 3", "eval_u");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "u[0] = 9\nu[1] = 108\nu[2] = 90\n");
  auto single = run_cli("eval --seq u --n 3 --j 2", "eval_uj");
  CHECK(single.exit_code == 0);
  CHECK(single.out == "90\n");
}

TEST_CASE("eval computes weighted prefix sums") {
  auto r = run_cli("eval --seq S --r 2 --n-max 4", "eval_prefix");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2736\n");
  auto w = run_cli("eval --seq S --r 1 --n-max 2 --weight 4k", "eval_weighted");
  CHECK(w.exit_code == 0);
  CHECK(w.out == "28\n");
}

TEST_CASE("eval without an index is a usage error") {
  auto r = run_cli("eval --seq S --r 2", "eval_bad");
  CHECK(r.exit_code == 2);
  auto both = run_cli("eval --seq S --r 2 --n 3 --n-max 4", "eval_both");
  CHECK(both.exit_code == 2);
}

TEST_CASE("eval computes power sums for the lemma5.1 recipe") {
  auto r = run_cli("eval --seq power-sum --r 2 --n 6", "eval_psum");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "55\n");
}

TEST_CASE("table prints the documented constant row") {
  auto r = run_cli("table --constants a --r-max 8", "table_a");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "a_1=1 a_3=3 a_5=15 a_7=21 a_9=15 a_11=33 a_13=1365 a_15=3\n");
}

TEST_CASE("table csv uses the fixed header") {
  auto r = run_cli("table --constants a --r-max 3 --format csv", "table_csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "r,a_r\n1,1\n3,3\n5,15\n");
  auto b = run_cli("table --constants b --r-max 3 --format csv", "table_csv_b");
  CHECK(b.out == "r,b_r\n1,4\n2,12\n3,12\n");
}

TEST_CASE("bernoulli table serializes rationals canonically") {
  auto r = run_cli("table --constants bernoulli --r-max 4 --format csv", "table_bern");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("m,B_m,U_m,V_m\n", 0) == 0);
  CHECK(r.out.find("12,-691/2730,-691,2730") == std::string::npos);  // r-max 4 stops at m=4
  CHECK(r.out.find("2,1/6,1,6") != std::string::npos);
}

TEST_CASE("verify single claim emits a json object") {
  auto r = run_cli("verify --claim thm1.3 --p-max 100 --format json", "verify_json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.is_object());
  CHECK(j["claim"] == "thm1.3");
  CHECK(j["kind"] == "theorem");
  CHECK(j["points"] == 24);
  CHECK(j["failures"].empty());
}

TEST_CASE("verify all covers each registered claim once") {
  auto r = run_cli(
      "verify --claim all --n-max 12 --r-max 2 --p-max 12 --format json --no-timing",
      "verify_all");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 15);
  std::vector<std::string> ids;
  for (const auto& entry : j) ids.push_back(entry["claim"]);
  const std::vector<std::string> expected = {
      "thm1.1", "thm1.2", "thm1.3", "thm1.4a", "thm1.4b", "lemma2.1", "lemma3.1", "lemma5.1",
      "lemma5.2", "conj1.1a", "conj1.1b", "sun5.4a", "sun5.4b", "conj1.4a", "conj1.4b"};
  CHECK(ids == expected);
  for (const auto& entry : j) CHECK(entry["elapsed_ms"] == 0);
}

TEST_CASE("unknown ids are rejected with exit 2") {
  CHECK(run_cli("verify --claim thm9.9", "verify_bad").exit_code == 2);
  CHECK(run_cli("identity --identity eq9.9", "identity_bad").exit_code == 2);
  CHECK(run_cli("table --constants q", "table_bad").exit_code == 2);
  CHECK(run_cli("eval --seq Q --n 3", "eval_badseq").exit_code == 2);
}

TEST_CASE("bad flags and bounds are usage errors") {
  CHECK(run_cli("verify", "verify_missing").exit_code == 2);
  CHECK(run_cli("verify --claim thm1.1 --format xml", "verify_badfmt").exit_code == 2);
  CHECK(run_cli("verify --claim thm1.1 --n-max 0", "verify_badn").exit_code == 2);
  CHECK(run_cli("verify --claim thm1.1 --jobs 0", "verify_badjobs").exit_code == 2);
  CHECK(run_cli("nonsense", "nocmd").exit_code == 2);
}

TEST_CASE("identity subcommand sweeps and reports") {
  auto r = run_cli("identity --identity eq1.8 --n-max 10 --format json", "identity_json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["identity"] == "eq1.8");
  CHECK(j["pass"] == true);
  CHECK(j["points"] == 11 * 31);
}

TEST_CASE("output flag writes the same bytes as stdout") {
  const std::string path = "cli_output_file.json";
  auto direct =
      run_cli("verify --claim lemma2.1 --n-max 20 --format json --no-timing", "direct");
  auto filed = run_cli("verify --claim lemma2.1 --n-max 20 --format json --no-timing --output " +
                           path,
                       "filed");
  CHECK(direct.exit_code == 0);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("json reports are byte-deterministic without timing") {
  const std::string args =
      "verify --claim lemma3.1 --n-max 40 --r-max 3 --format json --no-timing";
  auto a = run_cli(args, "det_a");
  auto b = run_cli(args + " --jobs 3", "det_b");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("strict conjectures flag is accepted") {
  auto r = run_cli("verify --claim sun5.4a --n-max 15 --strict-conjectures", "strict");
  CHECK(r.exit_code == 0);
}

TEST_CASE("csv verify output is per point") {
  auto r = run_cli("verify --claim lemma2.1 --n-max 3 --r-max 2 --format csv", "verify_csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("claim,params,value,modulus,residue,status\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 7);  // header + 6 points
}
