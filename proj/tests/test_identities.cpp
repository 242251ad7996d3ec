#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "binsum/identities.hpp"

using binsum::IdentityRanges;
using binsum::Integer;
using binsum::Rational;

TEST_CASE("column sum instances") {
  auto trivial = binsum::column_sum_sides(Integer(0), 0, 2);
  CHECK(trivial.equal());
  CHECK(trivial.lhs == Rational(3));

  auto positive = binsum::column_sum_sides(Integer(5), 2, 3);
  CHECK(positive.equal());
  CHECK(positive.lhs == Rational(74));  // 10 + 15 + 21 + 28

  auto negative = binsum::column_sum_sides(Integer(-4), 3, 2);
  CHECK(negative.equal());
}

TEST_CASE("squared row sum instances") {
  auto a = binsum::squared_row_sum_sides(1, Integer(5));
  CHECK(a.equal());
  CHECK(a.lhs == Rational(25));
  auto b = binsum::squared_row_sum_sides(0, Integer(7));
  CHECK(b.equal());
  CHECK(b.lhs == Rational(1));
  CHECK(binsum::squared_row_sum_sides(3, Integer(-2)).equal());
}

TEST_CASE("odd squared row sum instances reduce to integers") {
  auto a = binsum::squared_row_sum_odd_sides(0, Integer(9));
  CHECK(a.equal());
  CHECK(a.lhs == Rational(9));
  auto b = binsum::squared_row_sum_odd_sides(2, Integer(7));
  CHECK(b.equal());
  CHECK(b.lhs == Rational(371));
  CHECK(b.rhs.is_integer());
  auto c = binsum::squared_row_sum_odd_sides(4, Integer(-3));
  CHECK(c.equal());
  CHECK(c.rhs.is_integer());
}

TEST_CASE("half binomial instances") {
  CHECK(binsum::half_binomial_sides(0).lhs == Rational(1));
  CHECK(binsum::half_binomial_sides(0).equal());
  CHECK(binsum::half_binomial_sides(1).equal());
  auto l7 = binsum::half_binomial_sides(7);
  CHECK(l7.equal());
  CHECK(l7.lhs == Rational(3432));
}

TEST_CASE("alternating odd sums") {
  auto a = binsum::alternating_odd_sums(0, 5);
  CHECK(a.ok());
  CHECK(a.full_sum == Integer(5));
  auto b = binsum::alternating_odd_sums(0, 1);
  CHECK(b.ok());
  CHECK(b.full_sum == Integer(1));
  auto c = binsum::alternating_odd_sums(2, 5);
  CHECK(c.ok());
  CHECK(c.tail_sum == Integer(7));  // 5 - 7 + 9
  CHECK(c.tail_expected == Integer(5 + 2));
  auto d = binsum::alternating_odd_sums(3, 9);
  CHECK(d.ok());
  CHECK(d.tail_expected == Integer(9 - 3));
  CHECK_THROWS_AS(binsum::alternating_odd_sums(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(binsum::alternating_odd_sums(5, 5), std::invalid_argument);
}

TEST_CASE("u-term closed form instances") {
  auto boundary = binsum::u_term_closed_form_sides(3, 2);
  CHECK(boundary.equal());
  CHECK(boundary.lhs == Rational(90));
  auto interior = binsum::u_term_closed_form_sides(3, 0);
  CHECK(interior.equal());
  CHECK(interior.lhs == Rational(9));
  auto tiny = binsum::u_term_closed_form_sides(1, 0);
  CHECK(tiny.equal());
  CHECK(tiny.lhs == Rational(1));
  CHECK_THROWS_AS(binsum::u_term_closed_form_sides(3, 3), std::invalid_argument);
}

TEST_CASE("euler telescoping instances") {
  auto a = binsum::euler_telescoping_sides(1, 1);
  CHECK(a.equal());
  CHECK(a.lhs == Rational(1));
  CHECK(binsum::euler_telescoping_sides(7, 3).equal());
  CHECK(binsum::euler_telescoping_sides(12, 5).equal());
}

TEST_CASE("identity registry") {
  CHECK(binsum::identity_ids().size() == 7);
  CHECK(binsum::is_identity_id("eq1.8"));
  CHECK(binsum::is_identity_id("lemma5.3"));
  CHECK(!binsum::is_identity_id("eq9.9"));
  CHECK_THROWS_AS(binsum::sweep_identity("eq9.9", {}), std::invalid_argument);
}

TEST_CASE("sweeps pass on reduced grids") {
  IdentityRanges small;
  small.n_max = 8;
  small.m_max = 6;
  small.x_min = -10;
  small.x_max = 10;
  small.r_max = 3;
  small.p_max = 31;
  for (const auto& id : binsum::identity_ids()) {
    auto check = binsum::sweep_identity(id, small, 2);
    CAPTURE(check.id);
    CHECK(check.pass);
    CHECK(check.points > 0);
    CHECK(check.failure_point.empty());
  }
}

TEST_CASE("sweep point counts match the declared grid") {
  IdentityRanges r;
  r.n_max = 4;
  r.m_max = 3;
  r.x_min = -2;
  r.x_max = 2;
  auto eq17 = binsum::sweep_identity("eq1.7", r);
  CHECK(eq17.points == 5 * 4 * 5);  // x values * m values * n values
  auto eq18 = binsum::sweep_identity("eq1.8", r);
  CHECK(eq18.points == 5 * 5);
  IdentityRanges alt;
  alt.p_max = 7;
  auto sums = binsum::sweep_identity("alt-sums", alt);
  CHECK(sums.points == 1 + 3 + 5 + 7);
  IdentityRanges u;
  u.n_max = 10;
  auto closed = binsum::sweep_identity("lemma5.3", u);
  CHECK(closed.points == 55);
}

TEST_CASE("default grids cover the documented ranges") {
  // defaults: euler-telescope n <= 40 and r <= 6, lemma5.3 n <= 60,
  // half-binomial l <= 40, alt-sums odd p <= 101
  auto telescope = binsum::sweep_identity("euler-telescope", {}, 2);
  CHECK(telescope.pass);
  CHECK(telescope.points == 40 * 6);
  auto closed = binsum::sweep_identity("lemma5.3", {}, 2);
  CHECK(closed.pass);
  CHECK(closed.points == 61 * 30);  // sum of 1..60
  auto half = binsum::sweep_identity("half-binomial", {});
  CHECK(half.pass);
  CHECK(half.points == 41);
  auto sums = binsum::sweep_identity("alt-sums", {});
  CHECK(sums.pass);
  CHECK(sums.points == 51 * 51);
}

TEST_CASE("sweep results do not depend on the worker count") {
  IdentityRanges r;
  r.n_max = 12;
  for (const auto& id : binsum::identity_ids()) {
    auto serial = binsum::sweep_identity(id, r, 1);
    auto parallel = binsum::sweep_identity(id, r, 4);
    CHECK(serial.points == parallel.points);
    CHECK(serial.pass == parallel.pass);
    CHECK(serial.domain == parallel.domain);
  }
}

TEST_CASE("invalid sweep ranges are rejected") {
  IdentityRanges bad;
  bad.x_min = 5;
  bad.x_max = -5;
  CHECK_THROWS_AS(binsum::sweep_identity("eq1.8", bad), std::invalid_argument);
  IdentityRanges zero;
  zero.n_max = 0;
  CHECK_THROWS_AS(binsum::sweep_identity("lemma5.3", zero), std::invalid_argument);
}
