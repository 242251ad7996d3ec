#include "binsum/identities.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "binsum/binomial.hpp"
#include "binsum/sequences.hpp"
#include "binsum/special_numbers.hpp"
#include "parallel_util.hpp"

namespace binsum {

SidePair column_sum_sides(const Integer& x, long m, long n) {
  if (m < 0 || n < 0) {
    throw std::invalid_argument("column_sum_sides: m and n must be nonnegative");
  }
  Integer lhs(0);
  for (long k = 0; k <= n; ++k) {
    lhs += binomial(x + Integer(k), m);
  }
  Integer rhs = binomial(Integer(n) + x + Integer(1), m + 1) - binomial(x, m + 1);
  return {Rational(lhs), Rational(rhs)};
}

SidePair squared_row_sum_sides(long n, const Integer& x) {
  if (n < 0) throw std::invalid_argument("squared_row_sum_sides: n must be nonnegative");
  Integer lhs(0);
  for (long k = 0; k <= n; ++k) {
    Integer c = binomial(Integer(n), k);
    lhs += c * c * binomial(x + Integer(k), 2 * n);
  }
  Integer b = binomial(x, n);
  return {Rational(lhs), Rational(b * b)};
}

SidePair squared_row_sum_odd_sides(long n, const Integer& x) {
  if (n < 0) throw std::invalid_argument("squared_row_sum_odd_sides: n must be nonnegative");
  Integer lhs(0);
  for (long k = 0; k <= n; ++k) {
    Integer c = binomial(Integer(n), k);
    lhs += c * c * binomial(x + Integer(k), 2 * n + 1);
  }
  Integer sum(0);
  for (long k = 0; k <= n; ++k) {
    Integer c = binomial(x, k);
    sum += (Integer(2) * x - Integer(3 * k)) * c * c * central_binomial(k);
  }
  Rational rhs(sum, Integer(4 * n + 2) * central_binomial(n));
  return {Rational(lhs), rhs};
}

SidePair half_binomial_sides(long l) {
  if (l < 0) throw std::invalid_argument("half_binomial_sides: l must be nonnegative");
  Rational rhs = gen_binomial(Rational(Integer(-1), Integer(2)), l) *
                 pow(Rational(-4), static_cast<unsigned long>(l));
  return {Rational(central_binomial(l)), rhs};
}

AlternatingSumCheck alternating_odd_sums(long l, long p) {
  if (p < 1 || p % 2 == 0) {
    throw std::invalid_argument("alternating_odd_sums: p must be odd and positive");
  }
  if (l < 0 || l >= p) {
    throw std::invalid_argument("alternating_odd_sums: l must lie in [0, p)");
  }
  AlternatingSumCheck out;
  Integer full(0), tail(0);
  for (long j = 0; j < p; ++j) {
    Integer t(2 * j + 1);
    if (j % 2 != 0) t = -t;
    full += t;
    if (j >= l) tail += t;
  }
  out.full_sum = full;
  out.full_expected = Integer(p);
  out.tail_sum = tail;
  out.tail_expected = Integer(p) + ((l % 2 != 0) ? Integer(-l) : Integer(l));
  return out;
}

SidePair u_term_closed_form_sides(long n, long j) {
  if (n < 1 || j < 0 || j >= n) {
    throw std::invalid_argument("u_term_closed_form_sides: j must lie in [0, n)");
  }
  Integer lhs = u_term(n, j);
  Integer n2(static_cast<long long>(n) * n);
  Integer cj = binomial(Integer(n - 1), j);
  // The quotient form must divide out exactly for every j; at the boundary
  // it must also agree with the closed boundary formula.
  Rational quotient(Integer(2 * j + 1) * n2 * central_binomial(j) * cj * cj, Integer(j + 1));
  if (j == n - 1) {
    Rational boundary(n2 * binomial(Integer(2 * n - 1), n - 1));
    if (quotient != boundary) return {quotient, boundary};
    return {Rational(lhs), boundary};
  }
  return {Rational(lhs), quotient};
}

SidePair euler_telescoping_sides(long n, long r) {
  if (n < 1 || r < 1) {
    throw std::invalid_argument("euler_telescoping_sides: n and r must be positive");
  }
  Integer lhs(0);
  for (long k = 0; k < n; ++k) {
    lhs += power_odd_alt_term(k, r);
  }
  Rational half(Integer(1), Integer(2));
  Rational at_half = euler_polynomial(2 * r - 1, half);
  Rational at_shift = euler_polynomial(2 * r - 1, Rational(Integer(2 * n + 1), Integer(2)));
  Rational inner = (n % 2 != 0) ? at_half + at_shift : at_half - at_shift;
  Rational rhs = Rational(pow(Integer(2), static_cast<unsigned long>(2 * r - 2))) * inner;
  return {Rational(lhs), rhs};
}

namespace {

struct SliceOutcome {
  long points = 0;
  bool pass = true;
  std::vector<std::pair<std::string, long>> point;
  std::string lhs;
  std::string rhs;
};

void record_failure(SliceOutcome& slice, std::vector<std::pair<std::string, long>> point,
                    const SidePair& sides) {
  slice.pass = false;
  slice.point = std::move(point);
  slice.lhs = sides.lhs.to_string();
  slice.rhs = sides.rhs.to_string();
}

// Each outer value gets its own slice; slices stop at their first failure,
// and the merged report takes the failure of the lowest outer index.
template <class SliceFn>
IdentityCheck run_sweep(const std::string& id, std::string domain, long outer_count,
                        int jobs, SliceFn slice_fn) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<SliceOutcome> slices(static_cast<std::size_t>(outer_count));
  detail::for_each_index(outer_count, jobs,
                         [&](long i) { slice_fn(i, slices[static_cast<std::size_t>(i)]); });
  IdentityCheck check;
  check.id = id;
  check.domain = std::move(domain);
  for (const auto& slice : slices) {
    check.points += slice.points;
    if (check.pass && !slice.pass) {
      check.pass = false;
      check.failure_point = slice.point;
      check.failure_lhs = slice.lhs;
      check.failure_rhs = slice.rhs;
    }
  }
  check.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return check;
}

long pick(const std::optional<long>& v, long fallback) { return v.value_or(fallback); }

std::string range_str(const char* name, long lo, long hi) {
  std::ostringstream os;
  os << name << " in [" << lo << "," << hi << "]";
  return os.str();
}

IdentityCheck sweep_column_sum(const IdentityRanges& r, int jobs) {
  const long n_max = pick(r.n_max, 20);
  const long m_max = pick(r.m_max, 10);
  const long x_min = pick(r.x_min, -20);
  const long x_max = pick(r.x_max, 20);
  if (n_max < 0 || m_max < 0 || x_min > x_max) {
    throw std::invalid_argument("sweep_identity: empty or invalid ranges");
  }
  std::string domain =
      range_str("x", x_min, x_max) + ", " + range_str("m", 0, m_max) + ", " + range_str("n", 0, n_max);
  return run_sweep("eq1.7", domain, x_max - x_min + 1, jobs, [&](long i, SliceOutcome& out) {
    const Integer x(x_min + i);
    for (long m = 0; m <= m_max; ++m) {
      for (long n = 0; n <= n_max; ++n) {
        SidePair sides = column_sum_sides(x, m, n);
        ++out.points;
        if (!sides.equal()) {
          record_failure(out, {{"x", x_min + i}, {"m", m}, {"n", n}}, sides);
          return;
        }
      }
    }
  });
}

IdentityCheck sweep_squared_row_sum(const IdentityRanges& r, int jobs) {
  const long n_max = pick(r.n_max, 20);
  const long x_min = pick(r.x_min, -15);
  const long x_max = pick(r.x_max, 15);
  if (n_max < 0 || x_min > x_max) {
    throw std::invalid_argument("sweep_identity: empty or invalid ranges");
  }
  std::string domain = range_str("n", 0, n_max) + ", " + range_str("x", x_min, x_max);
  return run_sweep("eq1.8", domain, n_max + 1, jobs, [&](long n, SliceOutcome& out) {
    for (long xv = x_min; xv <= x_max; ++xv) {
      SidePair sides = squared_row_sum_sides(n, Integer(xv));
      ++out.points;
      if (!sides.equal()) {
        record_failure(out, {{"n", n}, {"x", xv}}, sides);
        return;
      }
    }
  });
}

IdentityCheck sweep_squared_row_sum_odd(const IdentityRanges& r, int jobs) {
  const long n_max = pick(r.n_max, 15);
  const long x_min = pick(r.x_min, -12);
  const long x_max = pick(r.x_max, 12);
  if (n_max < 0 || x_min > x_max) {
    throw std::invalid_argument("sweep_identity: empty or invalid ranges");
  }
  std::string domain = range_str("n", 0, n_max) + ", " + range_str("x", x_min, x_max);
  return run_sweep("eq1.9", domain, n_max + 1, jobs, [&](long n, SliceOutcome& out) {
    for (long xv = x_min; xv <= x_max; ++xv) {
      SidePair sides = squared_row_sum_odd_sides(n, Integer(xv));
      ++out.points;
      if (!sides.equal()) {
        record_failure(out, {{"n", n}, {"x", xv}}, sides);
        return;
      }
    }
  });
}

IdentityCheck sweep_half_binomial(const IdentityRanges& r, int jobs) {
  const long l_max = pick(r.n_max, 40);
  if (l_max < 0) throw std::invalid_argument("sweep_identity: empty or invalid ranges");
  return run_sweep("half-binomial", range_str("l", 0, l_max), l_max + 1, jobs,
                   [&](long l, SliceOutcome& out) {
                     SidePair sides = half_binomial_sides(l);
                     ++out.points;
                     if (!sides.equal()) record_failure(out, {{"l", l}}, sides);
                   });
}

IdentityCheck sweep_alternating_sums(const IdentityRanges& r, int jobs) {
  const long p_max = pick(r.p_max, 101);
  if (p_max < 1) throw std::invalid_argument("sweep_identity: empty or invalid ranges");
  const long odd_count = (p_max + 1) / 2;
  std::string domain = "odd p in [1," + std::to_string(p_max) + "], l in [0,p)";
  return run_sweep("alt-sums", domain, odd_count, jobs, [&](long i, SliceOutcome& out) {
    const long p = 2 * i + 1;
    for (long l = 0; l < p; ++l) {
      AlternatingSumCheck chk = alternating_odd_sums(l, p);
      ++out.points;
      if (!chk.ok()) {
        out.pass = false;
        out.point = {{"l", l}, {"p", p}};
        out.lhs = chk.tail_sum.to_string() + " (full " + chk.full_sum.to_string() + ")";
        out.rhs = chk.tail_expected.to_string() + " (full " + chk.full_expected.to_string() + ")";
        return;
      }
    }
  });
}

IdentityCheck sweep_u_term_closed_form(const IdentityRanges& r, int jobs) {
  const long n_max = pick(r.n_max, 60);
  if (n_max < 1) throw std::invalid_argument("sweep_identity: empty or invalid ranges");
  std::string domain = range_str("n", 1, n_max) + ", j in [0,n)";
  return run_sweep("lemma5.3", domain, n_max, jobs, [&](long i, SliceOutcome& out) {
    const long n = i + 1;
    for (long j = 0; j < n; ++j) {
      SidePair sides = u_term_closed_form_sides(n, j);
      ++out.points;
      if (!sides.equal()) {
        record_failure(out, {{"n", n}, {"j", j}}, sides);
        return;
      }
    }
  });
}

IdentityCheck sweep_euler_telescoping(const IdentityRanges& r, int jobs) {
  const long n_max = pick(r.n_max, 40);
  const long r_max = pick(r.r_max, 6);
  if (n_max < 1 || r_max < 1) {
    throw std::invalid_argument("sweep_identity: empty or invalid ranges");
  }
  std::string domain = range_str("n", 1, n_max) + ", " + range_str("r", 1, r_max);
  return run_sweep("euler-telescope", domain, n_max, jobs, [&](long i, SliceOutcome& out) {
    const long n = i + 1;
    for (long rr = 1; rr <= r_max; ++rr) {
      SidePair sides = euler_telescoping_sides(n, rr);
      ++out.points;
      if (!sides.equal()) {
        record_failure(out, {{"n", n}, {"r", rr}}, sides);
        return;
      }
    }
  });
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {
      "eq1.7", "eq1.8", "eq1.9", "half-binomial", "alt-sums", "lemma5.3", "euler-telescope"};
  return ids;
}

bool is_identity_id(const std::string& id) {
  const auto& ids = identity_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

IdentityCheck sweep_identity(const std::string& id, const IdentityRanges& ranges, int jobs) {
  if (id == "eq1.7") return sweep_column_sum(ranges, jobs);
  if (id == "eq1.8") return sweep_squared_row_sum(ranges, jobs);
  if (id == "eq1.9") return sweep_squared_row_sum_odd(ranges, jobs);
  if (id == "half-binomial") return sweep_half_binomial(ranges, jobs);
  if (id == "alt-sums") return sweep_alternating_sums(ranges, jobs);
  if (id == "lemma5.3") return sweep_u_term_closed_form(ranges, jobs);
  if (id == "euler-telescope") return sweep_euler_telescoping(ranges, jobs);
  throw std::invalid_argument("sweep_identity: unknown identity id: " + id);
}

}  // namespace binsum
