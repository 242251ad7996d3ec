#pragma once

#include "binsum/arith.hpp"

namespace binsum {

// Bernoulli numbers (x/(e^x - 1) convention, so B_1 = -1/2), Euler numbers,
// Euler polynomials, and power sums. Tables grow lazily under a mutex and
// are immutable below the published watermark, so concurrent queries are
// safe once a sweep has touched its largest index.

struct BernoulliEntry {
  long index = 0;
  Rational value;
  Integer numerator;    // reduced; carries the sign
  Integer denominator;  // positive; gcd(|numerator|, denominator) = 1
};

// B_m by the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1.
BernoulliEntry bernoulli(long m);

// Denominator of B_m for even m >= 2 as the product of all primes q with
// (q - 1) | m. Independent of bernoulli(); the two must agree.
Integer vsc_denominator(long m);

// E_n by the recurrence sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0 (n >= 1),
// E_0 = 1; odd indices are 0.
Integer euler_number(long n);

// E_n(x), evaluated by expanding around 1/2 with E_k(1/2) = E_k / 2^k.
Rational euler_polynomial(long n, const Rational& x);

// 1^m + 2^m + ... + (n-1)^m; power_sum(m, 1) = 0.
Integer power_sum(long m, long n);

}  // namespace binsum
