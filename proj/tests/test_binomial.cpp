#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "binsum/binomial.hpp"

using binsum::Integer;
using binsum::Rational;

TEST_CASE("small binomial values") {
  CHECK(binsum::binomial(Integer(5), 2) == Integer(10));
  CHECK(binsum::binomial(Integer(3), 5) == Integer(0));
  CHECK(binsum::binomial(Integer(0), 0) == Integer(1));
  CHECK(binsum::binomial(Integer(-7), 0) == Integer(1));
  CHECK(binsum::binomial(Integer(12), 12) == Integer(1));
}

TEST_CASE("negative tops follow the falling-factorial product") {
  // (-1)(-2)(-3)/6
  CHECK(binsum::binomial(Integer(-1), 3) == Integer(-1));
  CHECK(binsum::binomial(Integer(-1), 4) == Integer(1));
  CHECK(binsum::binomial(Integer(-5), 3) == Integer(-35));
  CHECK(binsum::binomial(Integer(-5), 4) == Integer(70));
  CHECK(binsum::binomial(Integer(-2), 1) == Integer(-2));
}

TEST_CASE("pascal rule holds across negative and positive tops") {
  for (long x = -20; x <= 20; ++x) {
    for (long m = 1; m <= 12; ++m) {
      CHECK(binsum::binomial(Integer(x), m) ==
            binsum::binomial(Integer(x - 1), m) + binsum::binomial(Integer(x - 1), m - 1));
    }
  }
}

TEST_CASE("tops beyond the row cache agree with the product formula") {
  const long big = binsum::binomial_row_cache_limit() + 300;
  Integer expected(1);
  for (long i = 0; i < 3; ++i) {
    expected = binsum::divide_exact(expected * Integer(big - i), Integer(i + 1));
  }
  CHECK(binsum::binomial(Integer(big), 3) == expected);
  CHECK(binsum::binomial(Integer(big), 0) == Integer(1));
}

TEST_CASE("gen_binomial on rational tops") {
  CHECK(binsum::gen_binomial(Rational(Integer(-1), Integer(2)), 1) ==
        Rational(Integer(-1), Integer(2)));
  CHECK(binsum::gen_binomial(Rational(Integer(-1), Integer(2)), 2) ==
        Rational(Integer(3), Integer(8)));
  CHECK(binsum::gen_binomial(Rational(7), 3) == Rational(35));
  CHECK(binsum::gen_binomial(Rational(Integer(1), Integer(3)), 0) == Rational(1));
}

TEST_CASE("gen_binomial restricted to integer tops equals binomial") {
  std::mt19937 rng(7781);
  std::uniform_int_distribution<long> tops(-40, 40);
  std::uniform_int_distribution<long> lower(0, 15);
  for (int i = 0; i < 300; ++i) {
    const long x = tops(rng);
    const long m = lower(rng);
    CHECK(binsum::gen_binomial(Rational(x), m) == Rational(binsum::binomial(Integer(x), m)));
  }
}

TEST_CASE("central binomial values") {
  CHECK(binsum::central_binomial(0) == Integer(1));
  CHECK(binsum::central_binomial(3) == Integer(20));
  CHECK(binsum::central_binomial(10) == Integer(184756));
}

TEST_CASE("central binomial equals the half-integer product form") {
  for (long l = 0; l <= 40; ++l) {
    Rational rhs = binsum::gen_binomial(Rational(Integer(-1), Integer(2)), l) *
                   binsum::pow(Rational(-4), static_cast<unsigned long>(l));
    CHECK(Rational(binsum::central_binomial(l)) == rhs);
  }
}

TEST_CASE("catalan integrality and values") {
  CHECK(binsum::catalan(0) == Integer(1));
  CHECK(binsum::catalan(4) == Integer(14));
  CHECK(binsum::catalan(6) == Integer(132));
  for (long k = 0; k <= 80; ++k) {
    CHECK(binsum::divides(Integer(k + 1), binsum::central_binomial(k)));
  }
}

TEST_CASE("precondition violations throw") {
  CHECK_THROWS_AS(binsum::binomial(Integer(4), -1), std::invalid_argument);
  CHECK_THROWS_AS(binsum::gen_binomial(Rational(1), -2), std::invalid_argument);
  CHECK_THROWS_AS(binsum::central_binomial(-1), std::invalid_argument);
  CHECK_THROWS_AS(binsum::catalan(-3), std::invalid_argument);
}
