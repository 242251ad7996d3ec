#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "binsum/binomial.hpp"
#include "binsum/special_numbers.hpp"

using binsum::bernoulli;
using binsum::Integer;
using binsum::Rational;

namespace {
Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }
}  // namespace

TEST_CASE("bernoulli numbers match the classical table") {
  CHECK(bernoulli(0).value == Rational(1));
  CHECK(bernoulli(1).value == frac(-1, 2));
  CHECK(bernoulli(2).value == frac(1, 6));
  CHECK(bernoulli(3).value == Rational(0));
  CHECK(bernoulli(4).value == frac(-1, 30));
  CHECK(bernoulli(6).value == frac(1, 42));
  CHECK(bernoulli(8).value == frac(-1, 30));
  CHECK(bernoulli(10).value == frac(5, 66));
  CHECK(bernoulli(12).value == frac(-691, 2730));
  CHECK(bernoulli(14).value == frac(7, 6));
}

TEST_CASE("bernoulli numerator and denominator are the reduced pair") {
  const auto& b2 = bernoulli(2);
  CHECK(b2.numerator == Integer(1));
  CHECK(b2.denominator == Integer(6));
  const auto& b12 = bernoulli(12);
  CHECK(b12.numerator == Integer(-691));
  CHECK(b12.denominator == Integer(2730));
  for (long m = 0; m <= 40; ++m) {
    const auto& b = bernoulli(m);
    CHECK(b.denominator > Integer(0));
    CHECK(binsum::gcd(binsum::abs(b.numerator), b.denominator) == Integer(1));
    CHECK(b.value == Rational(b.numerator, b.denominator));
  }
}

TEST_CASE("odd bernoulli numbers above one vanish") {
  for (long m = 3; m <= 41; m += 2) {
    CHECK(bernoulli(m).value == Rational(0));
  }
}

TEST_CASE("indices past the shared table still compute") {
  // 130 is past the cached range; the denominator has an independent route.
  CHECK(bernoulli(130).denominator == binsum::vsc_denominator(130));
  CHECK(bernoulli(131).value == Rational(0));
  CHECK(binsum::euler_number(131) == Integer(0));
  // defining recurrence at an extended even index
  Integer sum(0);
  for (long k = 0; 2 * k <= 130; ++k) {
    sum += binsum::binomial(Integer(130), 2 * k) * binsum::euler_number(2 * k);
  }
  CHECK(sum == Integer(0));
  // (-1)^n E_{2n} > 0
  CHECK(binsum::euler_number(130) < Integer(0));
  CHECK(binsum::euler_number(132) > Integer(0));
}

TEST_CASE("von staudt-clausen denominators") {
  CHECK(binsum::vsc_denominator(2) == Integer(6));
  CHECK(binsum::vsc_denominator(12) == Integer(2730));
  CHECK(binsum::vsc_denominator(14) == Integer(6));
  CHECK_THROWS_AS(binsum::vsc_denominator(3), std::invalid_argument);
  CHECK_THROWS_AS(binsum::vsc_denominator(0), std::invalid_argument);
}

TEST_CASE("the two denominator routes agree for even m up to 40") {
  for (long m = 2; m <= 40; m += 2) {
    CHECK(bernoulli(m).denominator == binsum::vsc_denominator(m));
    // 6 divides every even-index denominator.
    CHECK(binsum::divides(Integer(6), bernoulli(m).denominator));
  }
}

TEST_CASE("euler numbers") {
  CHECK(binsum::euler_number(0) == Integer(1));
  CHECK(binsum::euler_number(2) == Integer(-1));
  CHECK(binsum::euler_number(4) == Integer(5));
  CHECK(binsum::euler_number(5) == Integer(0));
  CHECK(binsum::euler_number(6) == Integer(-61));
  CHECK(binsum::euler_number(8) == Integer(1385));
  for (long n = 1; n <= 41; n += 2) {
    CHECK(binsum::euler_number(n) == Integer(0));
  }
}

TEST_CASE("euler number table satisfies its defining recurrence") {
  for (long n = 1; n <= 20; ++n) {
    Integer sum(0);
    for (long k = 0; k <= n; ++k) {
      sum += binsum::binomial(Integer(2 * n), 2 * k) * binsum::euler_number(2 * k);
    }
    CHECK(sum == Integer(0));
  }
}

TEST_CASE("euler polynomial point values") {
  CHECK(binsum::euler_polynomial(0, frac(9, 7)) == Rational(1));
  CHECK(binsum::euler_polynomial(1, frac(1, 2)) == Rational(0));
  // E_2(x) = x^2 - x
  CHECK(binsum::euler_polynomial(2, Rational(3)) == Rational(6));
  CHECK(binsum::euler_polynomial(2, frac(1, 2)) == frac(-1, 4));
  // E_n(1/2) = E_n / 2^n
  for (long n = 0; n <= 16; ++n) {
    CHECK(binsum::euler_polynomial(n, frac(1, 2)) ==
          Rational(binsum::euler_number(n), binsum::pow(Integer(2), n)));
  }
}

TEST_CASE("complementary property E_n(x) + E_n(x+1) = 2 x^n") {
  const std::vector<Rational> xs = {Rational(0),  Rational(1),   Rational(-3), frac(1, 2),
                                    frac(-2, 3),  frac(7, 5),    Rational(11), frac(-9, 4)};
  for (long n = 1; n <= 30; ++n) {
    for (const auto& x : xs) {
      Rational lhs = binsum::euler_polynomial(n, x) + binsum::euler_polynomial(n, x + Rational(1));
      CHECK(lhs == Rational(2) * binsum::pow(x, static_cast<unsigned long>(n)));
    }
  }
}

TEST_CASE("addition formula for euler polynomials") {
  const std::vector<Rational> xs = {Rational(0), frac(1, 2), frac(-2, 3), Rational(2)};
  const std::vector<Rational> ys = {Rational(1), frac(3, 4), frac(-1, 5), Rational(-2)};
  for (long n = 0; n <= 12; ++n) {
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        Rational rhs;
        for (long k = 0; k <= n; ++k) {
          rhs += Rational(binsum::binomial(Integer(n), k)) * binsum::euler_polynomial(k, x) *
                 binsum::pow(y, static_cast<unsigned long>(n - k));
        }
        CHECK(binsum::euler_polynomial(n, x + y) == rhs);
      }
    }
  }
}

TEST_CASE("power sums") {
  CHECK(binsum::power_sum(2, 3) == Integer(5));
  CHECK(binsum::power_sum(7, 1) == Integer(0));
  CHECK(binsum::power_sum(2, 6) == Integer(55));
  CHECK(binsum::power_sum(0, 10) == Integer(9));
  CHECK_THROWS_AS(binsum::power_sum(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(binsum::power_sum(-1, 5), std::invalid_argument);
}

TEST_CASE("bernoulli power-sum congruence at desk scale") {
  // V_m S_m(n) = n U_m (mod n^2) for even m
  for (long m = 2; m <= 12; m += 2) {
    const auto& b = bernoulli(m);
    for (long n = 1; n <= 100; ++n) {
      Integer n2(n * n);
      Integer lhs = b.denominator * binsum::power_sum(m, n);
      Integer rhs = Integer(n) * b.numerator;
      CHECK(binsum::mod_nonneg(lhs - rhs, n2) == Integer(0));
    }
  }
}
