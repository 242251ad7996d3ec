#pragma once

#include <string>
#include <vector>

#include "binsum/arith.hpp"

namespace binsum {

// The binomial-sum sequences and their weighted prefix sums. Every value is
// produced by direct summation from the defining formula; any faster route
// elsewhere in the library is checked against these, never substituted.

enum class Family {
  S,            // S_n^(r)  = sum_k C(n,k)^2 C(2k,k) (2k+1)^r
  T,            // T_n^(r)  = sum_k C(n,k)^2 C(2k,k) (2k+1)^r (-1)^k
  R,            // R_n      = sum_k C(n,k) C(n+k,k) / (2k-1)   (rational)
  PowerOdd,     // (2k+1)^(2r-1)
  PowerOddAlt,  // (2k+1)^(2r-1) (-1)^k
  UTerm,        // u_j = (2j+1) C(2j,j) sum_{k=j}^{n-1} (2k-j+1) C(k,j)^2
};

enum class Weight { None, K, FourK };

// Family plus its exponent parameter r (ignored for R) and, for UTerm, the
// ambient n that bounds the term index.
struct SequenceSpec {
  Family family = Family::S;
  long r = 1;
  long ambient_n = 0;
};

void validate(const SequenceSpec& spec);
bool produces_integers(Family family);

const char* family_name(Family family);
const char* weight_name(Weight weight);
bool parse_family(const std::string& token, Family& out);
bool parse_weight(const std::string& token, Weight& out);

Integer seq_S(long n, long r);
Integer seq_T(long n, long r);
Rational seq_R(long n);
Integer u_term(long n, long j);
Integer power_odd_term(long k, long r);
Integer power_odd_alt_term(long k, long r);

// k-th element of the sequence, as a rational (integer families have
// denominator 1).
Rational term(const SequenceSpec& spec, long k);

// sum_{k=0}^{n-1} weight(k) * term(k) with weight 1, k, or 4k.
Rational prefix_sum(const SequenceSpec& spec, long n, Weight weight = Weight::None);

// Incremental prefix-sum evaluator for the integer-valued families:
// advance() folds in the next term, maintaining the binomial row, the
// central binomials, and the odd-power table as it goes, so a sweep over
// n costs one term per step instead of a fresh O(n) summation. Each
// instance is single-threaded; sweeps give every worker its own.
class PrefixAccumulator {
 public:
  PrefixAccumulator(const SequenceSpec& spec, Weight weight);

  void advance();
  long count() const { return k_; }
  const Integer& sum() const { return acc_; }

 private:
  Integer current_term() const;

  SequenceSpec spec_;
  Weight weight_;
  long exponent_ = 0;  // actual exponent applied to (2k+1)
  long k_ = 0;
  std::vector<Integer> row_;       // C(k_, j), families S and T
  std::vector<Integer> central_;   // C(2j, j), j <= k_
  std::vector<Integer> odd_pow_;   // (2j+1)^exponent_
  Integer acc_;
};

}  // namespace binsum
