#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binsum/arith.hpp"

namespace binsum {

// Pointwise checks for the combinatorial identities the congruence proofs
// rest on, plus a sweep driver that runs a registered identity over a
// finite grid and reports the first failing instance.
//
// The free-variable identities are polynomial in x, so an integer grid
// wider than the polynomial degree at each tested n is decisive there;
// the sweeps below use such grids.

// Both side values of one instance of an identity.
struct SidePair {
  Rational lhs;
  Rational rhs;
  bool equal() const { return lhs == rhs; }
};

// sum_{k=0}^{n} C(x+k, m)  vs  C(n+x+1, m+1) - C(x, m+1)
SidePair column_sum_sides(const Integer& x, long m, long n);

// sum_{k=0}^{n} C(n,k)^2 C(x+k, 2n)  vs  C(x, n)^2
SidePair squared_row_sum_sides(long n, const Integer& x);

// sum_{k=0}^{n} C(n,k)^2 C(x+k, 2n+1)
//   vs  (1 / ((4n+2) C(2n,n))) sum_{k=0}^{n} (2x-3k) C(x,k)^2 C(2k,k).
// The right side must reduce to an integer whenever the left does.
SidePair squared_row_sum_odd_sides(long n, const Integer& x);

// C(2l, l)  vs  C(-1/2, l) (-4)^l
SidePair half_binomial_sides(long l);

// For odd p and 0 <= l < p:
//   sum_{j=0}^{p-1} (2j+1)(-1)^j = p   and
//   sum_{j=l}^{p-1} (2j+1)(-1)^j = p + (-1)^l l.
struct AlternatingSumCheck {
  Integer full_sum;
  Integer full_expected;
  Integer tail_sum;
  Integer tail_expected;
  bool ok() const { return full_sum == full_expected && tail_sum == tail_expected; }
};
AlternatingSumCheck alternating_odd_sums(long l, long p);

// u_j against its closed form: (1+2j) n^2 C(2j,j) C(n-1,j)^2 / (j+1) for
// j < n-1, and n^2 C(2n-1, n-1) at j = n-1. Also checks that (j+1) divides
// (1+2j) n^2 C(2j,j) C(n-1,j)^2 exactly.
SidePair u_term_closed_form_sides(long n, long j);

// sum_{k=0}^{n-1} (-1)^k (2k+1)^(2r-1)
//   vs  2^(2r-2) (E_{2r-1}(1/2) - (-1)^n E_{2r-1}(n+1/2))
SidePair euler_telescoping_sides(long n, long r);

// Sweep bounds; unset fields fall back to the identity's own desk-scale
// defaults (which match the verification suite's ranges).
struct IdentityRanges {
  std::optional<long> n_max;
  std::optional<long> m_max;
  std::optional<long> x_min;
  std::optional<long> x_max;
  std::optional<long> r_max;
  std::optional<long> p_max;
};

struct IdentityCheck {
  std::string id;
  std::string domain;  // the swept ranges, human-readable
  long points = 0;
  bool pass = true;
  // First failing instance: every bound variable plus both side values.
  std::vector<std::pair<std::string, long>> failure_point;
  std::string failure_lhs;
  std::string failure_rhs;
  std::int64_t elapsed_ms = 0;
};

const std::vector<std::string>& identity_ids();
bool is_identity_id(const std::string& id);

IdentityCheck sweep_identity(const std::string& id, const IdentityRanges& ranges = {},
                             int jobs = 1);

}  // namespace binsum
