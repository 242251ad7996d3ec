#include "binsum/engine.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "binsum/binomial.hpp"
#include "binsum/sequences.hpp"
#include "binsum/special_numbers.hpp"
#include "parallel_util.hpp"

namespace binsum {

const char* claim_kind_name(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::Theorem: return "theorem";
    case ClaimKind::Lemma: return "lemma";
    case ClaimKind::Conjecture: return "conjecture";
  }
  return "?";
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long> primes_up_to(long limit) {
  if (limit < 2) {
    throw std::invalid_argument("primes_up_to: limit must be >= 2");
  }
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<long> primes;
  for (long p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (long q = p * p; q <= limit; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return primes;
}

int legendre_symbol(const Integer& a, long p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("legendre_symbol: p must be an odd prime");
  }
  Integer residue = mod_nonneg(a, Integer(p));
  if (residue.is_zero()) return 0;
  Integer e = pow_mod(residue, Integer((p - 1) / 2), Integer(p));
  if (e == Integer(1)) return 1;
  if (e == Integer(p - 1)) return -1;
  throw arithmetic_error("legendre_symbol: Euler criterion produced a nonunit");
}

Integer a_constant(long r) {
  if (r < 1) throw std::invalid_argument("a_constant: r must be >= 1");
  if (r == 1) return Integer(1);
  return divide_exact(bernoulli(2 * r - 2).denominator, Integer(2));
}

Integer b_constant(long r) {
  if (r < 1) throw std::invalid_argument("b_constant: r must be >= 1");
  if (r == 1) return Integer(4);
  if (r % 2 == 0) return Integer(2) * bernoulli(r).denominator;
  return Integer(2) * bernoulli(r - 1).denominator;
}

const std::vector<std::pair<long, long>>& conjectured_a_constants() {
  static const std::vector<std::pair<long, long>> table = {
      {3, 3}, {5, 15}, {7, 21}, {9, 15}, {11, 33}, {13, 1365}, {15, 3}};
  return table;
}

const std::vector<std::pair<long, long>>& conjectured_b_constants() {
  static const std::vector<std::pair<long, long>> table = {
      {2, 12}, {3, 4}, {4, 60}, {5, 20}, {6, 84}, {7, 28}, {8, 60}, {9, 20}};
  return table;
}

std::pair<Integer, Integer> theorem_1_3_target(long p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("theorem_1_3_target: p must be prime");
  }
  if (p == 5) {
    throw std::invalid_argument("theorem_1_3_target: p = 5 is excluded");
  }
  const int via_five = legendre_symbol(Integer(p), 5);
  if (p != 2) {
    if (legendre_symbol(Integer(5), p) != via_five) {
      throw arithmetic_error("theorem_1_3_target: (5|p) != (p|5)");
    }
  }
  Integer p2(static_cast<long long>(p) * p);
  Integer target = divide_exact(p2 * Integer(5 - 3 * via_five), Integer(2));
  return {target, p2 * Integer(p)};
}

long param_value(const ParamPoint& params, const std::string& name) {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw std::invalid_argument("missing parameter: " + name);
}

bool congruence_holds(const Rational& value, const Integer& expected, const Integer& modulus) {
  Rational q = (value - Rational(expected)) / Rational(modulus);
  return q.is_integer();
}

namespace {

std::string residue_string(const PointResult& p) {
  if (p.value.is_integer()) {
    return mod_nonneg(p.value.to_integer(), p.modulus).to_string();
  }
  return (p.value / Rational(p.modulus)).to_string();
}

PointResult make_point(ParamPoint params, Rational value, Integer modulus, Integer expected,
                       bool edge = false) {
  if (modulus < Integer(1)) {
    throw arithmetic_error("claim evaluated with modulus < 1");
  }
  PointResult p;
  p.params = std::move(params);
  p.value = std::move(value);
  p.modulus = std::move(modulus);
  p.expected = mod_nonneg(expected, p.modulus);
  p.pass = congruence_holds(p.value, p.expected, p.modulus);
  p.edge = edge;
  return p;
}

// One result slot per slice keeps the merged order independent of thread
// scheduling.
template <class SliceFn>
std::vector<PointResult> run_slices(long count, int jobs, SliceFn fn) {
  std::vector<std::vector<PointResult>> slices(static_cast<std::size_t>(count));
  detail::for_each_index(count, jobs,
                         [&](long i) { fn(i, slices[static_cast<std::size_t>(i)]); });
  std::size_t total = 0;
  for (const auto& s : slices) total += s.size();
  std::vector<PointResult> out;
  out.reserve(total);
  for (auto& s : slices) {
    for (auto& p : s) out.push_back(std::move(p));
  }
  return out;
}

void require_n(const SweepRanges& ranges) {
  if (ranges.n_max < 1) throw std::invalid_argument("sweep: n_max must be >= 1");
}
void require_r(const SweepRanges& ranges) {
  if (ranges.r_max < 1) throw std::invalid_argument("sweep: r_max must be >= 1");
}

std::string rn_ranges(const SweepRanges& ranges, long r_lo = 1) {
  std::ostringstream os;
  os << "r in [" << r_lo << "," << ranges.r_max << "], n in [1," << ranges.n_max << "]";
  return os.str();
}

Integer square(long n) { return Integer(n) * Integer(n); }

// thm1.1 / thm1.2: n^2 | sum_{k<n} F_k^(2r)
CongruenceClaim make_even_exponent_claim(std::string id, Family family, char symbol) {
  CongruenceClaim c;
  c.id = std::move(id);
  c.kind = ClaimKind::Theorem;
  c.expectation = Expectation::Divisible;
  c.statement = std::string("n^2 | sum_{k=0}^{n-1} ") + symbol + "_k^(2r)";
  c.describe = [](const SweepRanges& ranges) { return rn_ranges(ranges); };
  c.sweep = [family](const SweepRanges& ranges, int jobs) {
    require_n(ranges);
    require_r(ranges);
    return run_slices(ranges.r_max, jobs, [&](long i, std::vector<PointResult>& out) {
      const long r = i + 1;
      PrefixAccumulator acc({family, 2 * r}, Weight::None);
      out.reserve(static_cast<std::size_t>(ranges.n_max));
      for (long n = 1; n <= ranges.n_max; ++n) {
        acc.advance();
        out.push_back(make_point({{"r", r}, {"n", n}}, Rational(acc.sum()), square(n), 0));
      }
    });
  };
  c.evaluate = [family](const ParamPoint& params) {
    const long r = param_value(params, "r");
    const long n = param_value(params, "n");
    Rational value = prefix_sum({family, 2 * r}, n);
    return make_point(params, value, square(n), 0);
  };
  return c;
}

CongruenceClaim make_thm13_claim() {
  CongruenceClaim c;
  c.id = "thm1.3";
  c.kind = ClaimKind::Theorem;
  c.expectation = Expectation::ExplicitResidue;
  c.statement = "sum_{k=0}^{p-1} T_k^(2) = p^2 (5 - 3(5|p)) / 2 (mod p^3)";
  c.describe = [](const SweepRanges& ranges) {
    return "primes p <= " + std::to_string(ranges.p_max) + ", p != 5 (p=2,3 edge)";
  };
  c.sweep = [](const SweepRanges& ranges, int) {
    if (ranges.p_max < 2) throw std::invalid_argument("sweep: p_max must be >= 2");
    const std::vector<long> primes = primes_up_to(ranges.p_max);
    std::vector<PointResult> out;
    out.reserve(primes.size());
    // Single incremental pass; each prime checkpoint reads the running
    // prefix sum Sigma_{k<p} T_k^(2).
    PrefixAccumulator acc({Family::T, 2}, Weight::None);
    std::size_t next = 0;
    for (long n = 1; n <= primes.back(); ++n) {
      acc.advance();
      if (next < primes.size() && primes[next] == n) {
        const long p = n;
        ++next;
        if (p == 5) continue;
        auto [target, modulus] = theorem_1_3_target(p);
        out.push_back(make_point({{"p", p}}, Rational(acc.sum()), modulus, target, p <= 3));
      }
    }
    return out;
  };
  c.evaluate = [](const ParamPoint& params) {
    const long p = param_value(params, "p");
    auto [target, modulus] = theorem_1_3_target(p);
    Rational value = prefix_sum({Family::T, 2}, p);
    return make_point(params, value, modulus, target, p <= 3);
  };
  return c;
}

// thm1.4a checks both the a_{2r-1} form mod n^2 and, for r > 1, the
// stronger V_{2r-2} form mod 2n^2; a point passes only if both hold.
PointResult evaluate_odd_exponent_point(long r, long n, const Integer& prefix) {
  const Integer n2 = square(n);
  const Integer primary = a_constant(r) * prefix;
  PointResult p;
  p.params = {{"r", r}, {"n", n}};
  p.expected = Integer(0);
  bool ok = divides(n2, primary);
  p.value = Rational(primary);
  p.modulus = n2;
  if (ok && r > 1) {
    const Integer strengthened = bernoulli(2 * r - 2).denominator * prefix;
    const Integer mod2 = Integer(2) * n2;
    if (!divides(mod2, strengthened)) {
      ok = false;
      p.value = Rational(strengthened);
      p.modulus = mod2;
    }
  }
  p.pass = ok;
  return p;
}

CongruenceClaim make_thm14a_claim() {
  CongruenceClaim c;
  c.id = "thm1.4a";
  c.kind = ClaimKind::Theorem;
  c.expectation = Expectation::Divisible;
  c.statement =
      "n^2 | a_{2r-1} sum_{k=0}^{n-1} S_k^(2r-1); for r > 1 also "
      "2n^2 | V_{2r-2} sum";
  c.describe = [](const SweepRanges& ranges) { return rn_ranges(ranges); };
  c.sweep = [](const SweepRanges& ranges, int jobs) {
    require_n(ranges);
    require_r(ranges);
    return run_slices(ranges.r_max, jobs, [&](long i, std::vector<PointResult>& out) {
      const long r = i + 1;
      PrefixAccumulator acc({Family::S, 2 * r - 1}, Weight::None);
      out.reserve(static_cast<std::size_t>(ranges.n_max));
      for (long n = 1; n <= ranges.n_max; ++n) {
        acc.advance();
        out.push_back(evaluate_odd_exponent_point(r, n, acc.sum()));
      }
    });
  };
  c.evaluate = [](const ParamPoint& params) {
    const long r = param_value(params, "r");
    const long n = param_value(params, "n");
    Rational prefix = prefix_sum({Family::S, 2 * r - 1}, n);
    return evaluate_odd_exponent_point(r, n, prefix.to_integer());
  };
  return c;
}

CongruenceClaim make_thm14b_claim() {
  CongruenceClaim c;
  c.id = "thm1.4b";
  c.kind = ClaimKind::Theorem;
  c.expectation = Expectation::Divisible;
  c.statement = "n^2 | b_r sum_{k=0}^{n-1} k S_k^(r)";
  c.describe = [](const SweepRanges& ranges) { return rn_ranges(ranges); };
  c.sweep = [](const SweepRanges& ranges, int jobs) {
    require_n(ranges);
    require_r(ranges);
    return run_slices(ranges.r_max, jobs, [&](long i, std::vector<PointResult>& out) {
      const long r = i + 1;
      const Integer multiplier = b_constant(r);
      PrefixAccumulator acc({Family::S, r}, Weight::K);
      out.reserve(static_cast<std::size_t>(ranges.n_max));
      for (long n = 1; n <= ranges.n_max; ++n) {
        acc.advance();
        out.push_back(
            make_point({{"r", r}, {"n", n}}, Rational(multiplier * acc.sum()), square(n), 0));
      }
    });
  };
  c.evaluate = [](const ParamPoint& params) {
    const long r = param_value(params, "r");
    const long n = param_value(params, "n");
    Rational value = Rational(b_constant(r)) * prefix_sum({Family::S, r}, n, Weight::K);
    return make_point(params, value, square(n), 0);
  };
  return c;
}

// lemma2.1 / lemma3.1: n | sum_{k<n} (2k+1)^(2r-1), plain and alternating.
CongruenceClaim make_odd_power_sum_claim(std::string id, Family family, bool alternating) {
  CongruenceClaim c;
  c.id = std::move(id);
  c.kind = ClaimKind::Lemma;
  c.expectation = Expectation::Divisible;
  c.statement = alternating ? "n | sum_{k=0}^{n-1} (-1)^k (2k+1)^(2r-1)"
                            : "n | sum_{k=0}^{n-1} (2k+1)^(2r-1)";
  c.describe = [](const SweepRanges& ranges) { return rn_ranges(ranges); };
  c.sweep = [family](const SweepRanges& ranges, int jobs) {
    require_n(ranges);
    require_r(ranges);
    return run_slices(ranges.r_max, jobs, [&](long i, std::vector<PointResult>& out) {
      const long r = i + 1;
      PrefixAccumulator acc({family, r}, Weight::None);
      out.reserve(static_cast<std::size_t>(ranges.n_max));
      for (long n = 1; n <= ranges.n_max; ++n) {
        acc.advance();
        out.push_back(make_point({{"r", r}, {"n", n}}, Rational(acc.sum()), Integer(n), 0));
      }
    });
  };
  c.evaluate = [family](const ParamPoint& params) {
    const long r = param_value(params, "r");
    const long n = param_value(params, "n");
    Rational value = prefix_sum({family, r}, n);
    return make_point(params, value, Integer(n), 0);
  };
  return c;
}

PointResult evaluate_bernoulli_power_sum_point(long m, long n, const Integer& psum) {
  const BernoulliEntry& b = bernoulli(m);
  return make_point({{"m", m}, {"n", n}}, Rational(b.denominator * psum), square(n),
                    Integer(n) * b.numerator);
}

CongruenceClaim make_lemma51_claim() {
  CongruenceClaim c;
  c.id = "lemma5.1";
  c.kind = ClaimKind::Lemma;
  c.expectation = Expectation::ExplicitResidue;
  c.statement = "V_m S_m(n) = n U_m (mod n^2) for even m >= 2";
  c.describe = [](const SweepRanges& ranges) {
    std::ostringstream os;
    os << "even m in [2," << ranges.r_max << "], n in [1," << ranges.n_max << "]";
    return os.str();
  };
  c.sweep = [](const SweepRanges& ranges, int jobs) {
    require_n(ranges);
    require_r(ranges);
    std::vector<long> ms;
    for (long m = 2; m <= ranges.r_max; m += 2) ms.push_back(m);
    return run_slices(static_cast<long>(ms.size()), jobs,
                      [&](long i, std::vector<PointResult>& out) {
                        const long m = ms[static_cast<std::size_t>(i)];
                        Integer psum(0);  // S_m(n), starting at S_m(1) = 0
                        out.reserve(static_cast<std::size_t>(ranges.n_max));
                        for (long n = 1; n <= ranges.n_max; ++n) {
                          out.push_back(evaluate_bernoulli_power_sum_point(m, n, psum));
                          psum += pow(Integer(n), static_cast<unsigned long>(m));
                        }
                      });
  };
  c.evaluate = [](const ParamPoint& params) {
    const long m = param_value(params, "m");
    const long n = param_value(params, "n");
    return evaluate_bernoulli_power_sum_point(m, n, power_sum(m, n));
  };
  return c;
}

CongruenceClaim make_lemma52_claim() {
  CongruenceClaim c;
  c.id = "lemma5.2";
  c.kind = ClaimKind::Lemma;
  c.expectation = Expectation::Divisible;
  c.statement = "2n | V_{2r-2} sum_{j=0}^{n-1} (2j+1)^(2r-2) for r > 1";
  c.describe = [](const SweepRanges& ranges) { return rn_ranges(ranges, 2); };
  c.sweep = [](const SweepRanges& ranges, int jobs) {
    require_n(ranges);
    require_r(ranges);
    const long count = ranges.r_max - 1;  // r = 2..r_max
    return run_slices(count < 0 ? 0 : count, jobs, [&](long i, std::vector<PointResult>& out) {
      const long r = i + 2;
      const Integer v = bernoulli(2 * r - 2).denominator;
      Integer sum(0);
      out.reserve(static_cast<std::size_t>(ranges.n_max));
      for (long n = 1; n <= ranges.n_max; ++n) {
        sum += pow(Integer(2 * n - 1), static_cast<unsigned long>(2 * r - 2));
        out.push_back(make_point({{"r", r}, {"n", n}}, Rational(v * sum), Integer(2 * n), 0));
      }
    });
  };
  c.evaluate = [](const ParamPoint& params) {
    const long r = param_value(params, "r");
    const long n = param_value(params, "n");
    if (r < 2) throw std::invalid_argument("lemma5.2: r must be > 1");
    Integer sum(0);
    for (long j = 0; j < n; ++j) {
      sum += pow(Integer(2 * j + 1), static_cast<unsigned long>(2 * r - 2));
    }
    return make_point(params, Rational(bernoulli(2 * r - 2).denominator * sum), Integer(2 * n),
                      0);
  };
  return c;
}

// Single-parameter conjecture sweeps over n with a fixed family/weight and
// integer multiplier.
CongruenceClaim make_simple_conjecture(std::string id, std::string statement, Family family,
                                       long exponent, Weight weight, long multiplier) {
  CongruenceClaim c;
  c.id = std::move(id);
  c.kind = ClaimKind::Conjecture;
  c.expectation = Expectation::Divisible;
  c.statement = std::move(statement);
  c.describe = [](const SweepRanges& ranges) {
    return "n in [1," + std::to_string(ranges.n_max) + "]";
  };
  c.sweep = [family, exponent, weight, multiplier](const SweepRanges& ranges, int) {
    require_n(ranges);
    std::vector<PointResult> out;
    out.reserve(static_cast<std::size_t>(ranges.n_max));
    PrefixAccumulator acc({family, exponent}, weight);
    for (long n = 1; n <= ranges.n_max; ++n) {
      acc.advance();
      out.push_back(
          make_point({{"n", n}}, Rational(Integer(multiplier) * acc.sum()), square(n), 0));
    }
    return out;
  };
  c.evaluate = [family, exponent, weight, multiplier](const ParamPoint& params) {
    const long n = param_value(params, "n");
    Rational value = Rational(multiplier) * prefix_sum({family, exponent}, n, weight);
    return make_point(params, value, square(n), 0);
  };
  return c;
}

// Integrality conjectures over the rational sequence R: multiplier times
// the (optionally (2k+1)-weighted) sum of R_k^2 must be divisible by n.
CongruenceClaim make_r_square_conjecture(std::string id, std::string statement, long multiplier,
                                         bool odd_weight) {
  CongruenceClaim c;
  c.id = std::move(id);
  c.kind = ClaimKind::Conjecture;
  c.expectation = Expectation::Divisible;
  c.statement = std::move(statement);
  c.describe = [](const SweepRanges& ranges) {
    return "n in [1," + std::to_string(ranges.n_max) + "]";
  };
  c.sweep = [multiplier, odd_weight](const SweepRanges& ranges, int) {
    require_n(ranges);
    std::vector<PointResult> out;
    out.reserve(static_cast<std::size_t>(ranges.n_max));
    Rational sum;
    for (long n = 1; n <= ranges.n_max; ++n) {
      const long k = n - 1;
      Rational rk = seq_R(k);
      Rational sq = rk * rk;
      if (odd_weight) sq *= Rational(2 * k + 1);
      sum += sq;
      out.push_back(make_point({{"n", n}}, Rational(multiplier) * sum, Integer(n), 0));
    }
    return out;
  };
  c.evaluate = [multiplier, odd_weight](const ParamPoint& params) {
    const long n = param_value(params, "n");
    Rational sum;
    for (long k = 0; k < n; ++k) {
      Rational rk = seq_R(k);
      Rational sq = rk * rk;
      if (odd_weight) sq *= Rational(2 * k + 1);
      sum += sq;
    }
    return make_point(params, Rational(multiplier) * sum, Integer(n), 0);
  };
  return c;
}

std::string table_keys(const std::vector<std::pair<long, long>>& table) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i > 0) os << ",";
    os << table[i].first;
  }
  os << "}";
  return os.str();
}

// conj1.4a / conj1.4b: the conjectured constant tables, swept entry by
// entry regardless of r_max (the tables are finite).
CongruenceClaim make_conjectured_table_claim(std::string id, bool weighted) {
  const auto& table = weighted ? conjectured_b_constants() : conjectured_a_constants();
  const char* index_name = weighted ? "r" : "i";
  CongruenceClaim c;
  c.id = std::move(id);
  c.kind = ClaimKind::Conjecture;
  c.expectation = Expectation::Divisible;
  c.statement = weighted ? "n^2 | b'_r sum_{k=0}^{n-1} k S_k^(r), conjectured b' table"
                         : "n^2 | a'_i sum_{k=0}^{n-1} S_k^(i), conjectured a' table";
  c.describe = [&table, index_name](const SweepRanges& ranges) {
    std::ostringstream os;
    os << index_name << " in " << table_keys(table) << ", n in [1," << ranges.n_max << "]";
    return os.str();
  };
  c.sweep = [&table, index_name, weighted](const SweepRanges& ranges, int jobs) {
    require_n(ranges);
    return run_slices(static_cast<long>(table.size()), jobs,
                      [&](long i, std::vector<PointResult>& out) {
                        const auto [index, multiplier] = table[static_cast<std::size_t>(i)];
                        PrefixAccumulator acc({Family::S, index},
                                              weighted ? Weight::K : Weight::None);
                        out.reserve(static_cast<std::size_t>(ranges.n_max));
                        for (long n = 1; n <= ranges.n_max; ++n) {
                          acc.advance();
                          out.push_back(make_point({{index_name, index}, {"n", n}},
                                                   Rational(Integer(multiplier) * acc.sum()),
                                                   square(n), 0));
                        }
                      });
  };
  c.evaluate = [&table, index_name, weighted](const ParamPoint& params) {
    const long index = param_value(params, index_name);
    const long n = param_value(params, "n");
    long multiplier = -1;
    for (const auto& [k, v] : table) {
      if (k == index) multiplier = v;
    }
    if (multiplier < 0) throw std::invalid_argument("conjectured table: unknown index");
    Rational value = Rational(multiplier) *
                     prefix_sum({Family::S, index}, n, weighted ? Weight::K : Weight::None);
    return make_point(params, value, square(n), 0);
  };
  return c;
}

std::vector<CongruenceClaim> build_registry() {
  std::vector<CongruenceClaim> claims;
  claims.push_back(make_even_exponent_claim("thm1.1", Family::S, 'S'));
  claims.push_back(make_even_exponent_claim("thm1.2", Family::T, 'T'));
  claims.push_back(make_thm13_claim());
  claims.push_back(make_thm14a_claim());
  claims.push_back(make_thm14b_claim());
  claims.push_back(make_odd_power_sum_claim("lemma2.1", Family::PowerOdd, false));
  claims.push_back(make_odd_power_sum_claim("lemma3.1", Family::PowerOddAlt, true));
  claims.push_back(make_lemma51_claim());
  claims.push_back(make_lemma52_claim());
  claims.push_back(make_simple_conjecture("conj1.1a", "n^2 | 4 sum_{k=0}^{n-1} k S_k",
                                          Family::S, 1, Weight::K, 4));
  claims.push_back(make_simple_conjecture("conj1.1b", "n^2 | sum_{k=0}^{n-1} S_k^(2)",
                                          Family::S, 2, Weight::None, 1));
  claims.push_back(make_r_square_conjecture("sun5.4a", "n | 3 sum_{k=0}^{n-1} R_k^2", 3, false));
  claims.push_back(
      make_r_square_conjecture("sun5.4b", "n | sum_{k=0}^{n-1} (2k+1) R_k^2", 1, true));
  claims.push_back(make_conjectured_table_claim("conj1.4a", false));
  claims.push_back(make_conjectured_table_claim("conj1.4b", true));
  return claims;
}

}  // namespace

const std::vector<CongruenceClaim>& claim_registry() {
  static const std::vector<CongruenceClaim> claims = build_registry();
  return claims;
}

const CongruenceClaim* find_claim(const std::string& id) {
  for (const auto& claim : claim_registry()) {
    if (claim.id == id) return &claim;
  }
  return nullptr;
}

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& claim : claim_registry()) ids.push_back(claim.id);
  return ids;
}

FailureEntry to_failure_entry(const PointResult& point) {
  FailureEntry f;
  f.params = point.params;
  f.value = point.value.is_integer() ? point.value.to_integer().to_string()
                                     : point.value.to_string();
  f.modulus = point.modulus.to_string();
  f.residue = residue_string(point);
  return f;
}

VerificationReport verify_claim(const CongruenceClaim& claim, const SweepRanges& ranges,
                                int jobs, std::vector<PointResult>* point_log) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<PointResult> points = claim.sweep(ranges, jobs < 1 ? 1 : jobs);
  VerificationReport report;
  report.claim = claim.id;
  report.kind = claim.kind;
  report.ranges = claim.describe(ranges);
  report.points = static_cast<long>(points.size());
  for (const auto& p : points) {
    if (!p.pass) report.failures.push_back(to_failure_entry(p));
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (point_log) *point_log = std::move(points);
  return report;
}

PointResult recheck_point(const std::string& claim_id, const ParamPoint& params) {
  const CongruenceClaim* claim = find_claim(claim_id);
  if (claim == nullptr) {
    throw std::invalid_argument("recheck_point: unknown claim id: " + claim_id);
  }
  return claim->evaluate(params);
}

}  // namespace binsum
