#pragma once

#include "binsum/arith.hpp"

namespace binsum {

// Binomial coefficients over integer and rational tops, plus the central
// binomial / Catalan helpers. Nonnegative integer tops are served from a
// shared Pascal-row cache; rows are immutable once published, so readers
// below the published watermark take no lock. Pre-populating with the
// ensure_* calls before a parallel sweep avoids growth contention.

// C(x, m) for any integer x (negative tops follow the falling-factorial
// product x(x-1)...(x-m+1)/m!). For 0 <= x < m the value is 0; C(x, 0) = 1.
Integer binomial(const Integer& x, long m);

// C(x, m) for rational x; agrees with binomial() on integer x.
Rational gen_binomial(const Rational& x, long m);

// C(2k, k).
Integer central_binomial(long k);

// C(2k, k) / (k + 1).
Integer catalan(long k);

// Pre-populate the Pascal-row cache for tops 0..n (clamped to the cache
// limit) and the central-binomial cache for indices 0..k.
void ensure_binomial_rows(long n);
void ensure_central_binomials(long k);

// Largest top kept in the Pascal-row cache; larger tops are recomputed
// per call instead of cached.
long binomial_row_cache_limit();

}  // namespace binsum
