#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "binsum/arith.hpp"

namespace binsum {

// Claim registry and sweep engine. Every theorem, lemma, and conjecture is
// registered under a stable id and swept over configurable ranges in exact
// arithmetic; conjecture-kind failures are findings, not bugs, and are
// reported separately from theorem-kind failures.

enum class ClaimKind { Theorem, Lemma, Conjecture };
enum class Expectation { Divisible, ExplicitResidue };

const char* claim_kind_name(ClaimKind kind);

bool is_prime(long n);

// All primes <= limit, ascending. Requires limit >= 2.
std::vector<long> primes_up_to(long limit);

// Euler's criterion: 0 iff p | a, else a^((p-1)/2) mod p mapped to +-1.
// p must be an odd prime.
int legendre_symbol(const Integer& a, long p);

// Multiplier for the odd-exponent prefix-sum claim: 1 for r = 1, else half
// the Bernoulli denominator V_{2r-2} (which is always even).
Integer a_constant(long r);

// Multiplier for the k-weighted prefix-sum claim: 4 for r = 1, 2 V_r for
// even r, 2 V_{r-1} for odd r > 1.
Integer b_constant(long r);

// The conjectured alternative constants (smaller than the proven ones for
// odd b-indices), keyed by subscript.
const std::vector<std::pair<long, long>>& conjectured_a_constants();
const std::vector<std::pair<long, long>>& conjectured_b_constants();

// Target residue and modulus for claim thm1.3 at prime p != 5:
// (p^2 (5 - 3(p|5)) / 2, p^3). The halving is exact since 5 - 3(+-1) is
// 2 or 8. For odd p the engine also checks (5|p) = (p|5) rather than
// trusting one side of the reciprocity step.
std::pair<Integer, Integer> theorem_1_3_target(long p);

struct SweepRanges {
  long n_max = 200;
  long r_max = 5;
  long p_max = 500;
};

using ParamPoint = std::vector<std::pair<std::string, long>>;

long param_value(const ParamPoint& params, const std::string& name);

struct PointResult {
  ParamPoint params;
  Rational value;
  Integer modulus;
  Integer expected;  // reduced nonnegative target residue
  bool pass = false;
  bool edge = false;  // outside the proof's assumptions, checked anyway
};

struct FailureEntry {
  ParamPoint params;
  std::string value;    // decimal, or "num/den" for rational-valued claims
  std::string modulus;  // decimal
  std::string residue;  // observed reduced residue, or reduced quotient
};

struct VerificationReport {
  std::string claim;
  ClaimKind kind = ClaimKind::Theorem;
  std::string ranges;
  long points = 0;
  std::vector<FailureEntry> failures;
  std::int64_t elapsed_ms = 0;
  bool pass() const { return failures.empty(); }
};

// A registered claim: how its parameter grid derives from SweepRanges, an
// incremental sweep over that grid, and a direct single-point evaluator
// (independent of the sweep's accumulators) for re-checking failures.
struct CongruenceClaim {
  std::string id;
  ClaimKind kind = ClaimKind::Theorem;
  Expectation expectation = Expectation::Divisible;
  std::string statement;
  std::function<std::string(const SweepRanges&)> describe;
  std::function<std::vector<PointResult>(const SweepRanges&, int jobs)> sweep;
  std::function<PointResult(const ParamPoint&)> evaluate;
};

const std::vector<CongruenceClaim>& claim_registry();
const CongruenceClaim* find_claim(const std::string& id);
std::vector<std::string> claim_ids();

// value == expected (mod modulus), where non-integral rational values never
// satisfy a congruence. Divisibility claims use expected = 0.
bool congruence_holds(const Rational& value, const Integer& expected, const Integer& modulus);

VerificationReport verify_claim(const CongruenceClaim& claim, const SweepRanges& ranges,
                                int jobs = 1, std::vector<PointResult>* point_log = nullptr);

// Re-evaluates one parameter point through the claim's direct evaluator.
PointResult recheck_point(const std::string& claim_id, const ParamPoint& params);

FailureEntry to_failure_entry(const PointResult& point);

}  // namespace binsum
