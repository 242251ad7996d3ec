#include "binsum/special_numbers.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "binsum/binomial.hpp"

namespace binsum {
namespace {

constexpr long kBernoulliLimit = 128;
constexpr long kEulerLimit = 128;

BernoulliEntry make_bernoulli_entry(long m, Rational value) {
  BernoulliEntry e;
  e.index = m;
  e.value = std::move(value);
  e.numerator = e.value.num();
  e.denominator = e.value.den();
  return e;
}

class BernoulliTable {
 public:
  BernoulliTable() : entries_(kBernoulliLimit + 1) {}

  const BernoulliEntry& entry(long m) {
    if (m >= published_.load(std::memory_order_acquire)) grow(m);
    return entries_[static_cast<std::size_t>(m)];
  }

  // Indices past the fixed-size cache: extend the recurrence locally,
  // seeded with the cached prefix. Slower per call but total.
  BernoulliEntry entry_uncached(long m) {
    grow(kBernoulliLimit);
    std::vector<Rational> values(static_cast<std::size_t>(m) + 1);
    for (long i = 0; i <= kBernoulliLimit; ++i) {
      values[static_cast<std::size_t>(i)] = entries_[static_cast<std::size_t>(i)].value;
    }
    for (long i = kBernoulliLimit + 1; i <= m; ++i) {
      Rational sum;
      for (long j = 0; j < i; ++j) {
        sum += Rational(binomial(Integer(i + 1), j)) * values[static_cast<std::size_t>(j)];
      }
      values[static_cast<std::size_t>(i)] = -(sum / Rational(i + 1));
    }
    return make_bernoulli_entry(m, values[static_cast<std::size_t>(m)]);
  }

 private:
  void grow(long m) {
    std::lock_guard<std::mutex> lock(mu_);
    long have = published_.load(std::memory_order_relaxed);
    if (have == 0) {
      entries_[0] = make_bernoulli_entry(0, Rational(1));
      have = 1;
      published_.store(1, std::memory_order_release);
    }
    for (long i = have; i <= m; ++i) {
      // B_i = -(sum_{j<i} C(i+1, j) B_j) / (i+1)
      Rational sum;
      for (long j = 0; j < i; ++j) {
        sum += Rational(binomial(Integer(i + 1), j)) * entries_[static_cast<std::size_t>(j)].value;
      }
      entries_[static_cast<std::size_t>(i)] =
          make_bernoulli_entry(i, -(sum / Rational(i + 1)));
      published_.store(i + 1, std::memory_order_release);
    }
  }

  std::vector<BernoulliEntry> entries_;
  std::atomic<long> published_{0};
  std::mutex mu_;
};

class EulerTable {
 public:
  EulerTable() : values_(kEulerLimit + 1) {}

  const Integer& value(long n) {
    if (n >= published_.load(std::memory_order_acquire)) grow(n);
    return values_[static_cast<std::size_t>(n)];
  }

  Integer value_uncached(long n) {
    if (n % 2 != 0) return Integer(0);
    grow(kEulerLimit);
    std::vector<Integer> values(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= kEulerLimit; ++i) {
      values[static_cast<std::size_t>(i)] = values_[static_cast<std::size_t>(i)];
    }
    for (long i = kEulerLimit + 1; i <= n; ++i) {
      if (i % 2 != 0) continue;
      Integer sum(0);
      for (long k = 0; 2 * k < i; ++k) {
        sum += binomial(Integer(i), 2 * k) * values[static_cast<std::size_t>(2 * k)];
      }
      values[static_cast<std::size_t>(i)] = -sum;
    }
    return values[static_cast<std::size_t>(n)];
  }

 private:
  void grow(long n) {
    std::lock_guard<std::mutex> lock(mu_);
    long have = published_.load(std::memory_order_relaxed);
    if (have == 0) {
      values_[0] = 1;
      have = 1;
      published_.store(1, std::memory_order_release);
    }
    for (long i = have; i <= n; ++i) {
      if (i % 2 != 0) {
        values_[static_cast<std::size_t>(i)] = 0;
      } else {
        // E_i = -sum_{k < i/2} C(i, 2k) E_{2k}
        Integer sum(0);
        for (long k = 0; 2 * k < i; ++k) {
          sum += binomial(Integer(i), 2 * k) * values_[static_cast<std::size_t>(2 * k)];
        }
        values_[static_cast<std::size_t>(i)] = -sum;
      }
      published_.store(i + 1, std::memory_order_release);
    }
  }

  std::vector<Integer> values_;
  std::atomic<long> published_{0};
  std::mutex mu_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

EulerTable& euler_table() {
  static EulerTable table;
  return table;
}

std::vector<long> sieve_primes(long limit) {
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<long> primes;
  for (long p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (long q = p * p; q <= limit; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return primes;
}

}  // namespace

BernoulliEntry bernoulli(long m) {
  if (m < 0) {
    throw std::invalid_argument("bernoulli: index must be nonnegative");
  }
  if (m > kBernoulliLimit) return bernoulli_table().entry_uncached(m);
  return bernoulli_table().entry(m);
}

Integer vsc_denominator(long m) {
  if (m < 2 || m % 2 != 0) {
    throw std::invalid_argument("vsc_denominator: index must be even and >= 2");
  }
  Integer product(1);
  for (long q : sieve_primes(m + 1)) {
    if (m % (q - 1) == 0) product *= Integer(q);
  }
  return product;
}

Integer euler_number(long n) {
  if (n < 0) {
    throw std::invalid_argument("euler_number: index must be nonnegative");
  }
  if (n > kEulerLimit) return euler_table().value_uncached(n);
  return euler_table().value(n);
}

Rational euler_polynomial(long n, const Rational& x) {
  if (n < 0) {
    throw std::invalid_argument("euler_polynomial: degree must be nonnegative");
  }
  // E_n(x) = sum_k C(n, k) (E_k / 2^k) (x - 1/2)^(n-k); odd E_k vanish.
  const Rational shift = x - Rational(Integer(1), Integer(2));
  std::vector<Rational> shift_pow(static_cast<std::size_t>(n) + 1);
  shift_pow[0] = Rational(1);
  for (long i = 1; i <= n; ++i) {
    shift_pow[static_cast<std::size_t>(i)] = shift_pow[static_cast<std::size_t>(i - 1)] * shift;
  }
  Rational result;
  for (long k = 0; k <= n; ++k) {
    const Integer ek = euler_number(k);
    if (ek.is_zero()) continue;
    result += Rational(binomial(Integer(n), k)) *
              Rational(ek, pow(Integer(2), static_cast<unsigned long>(k))) *
              shift_pow[static_cast<std::size_t>(n - k)];
  }
  return result;
}

Integer power_sum(long m, long n) {
  if (m < 0) {
    throw std::invalid_argument("power_sum: exponent must be nonnegative");
  }
  if (n < 1) {
    throw std::invalid_argument("power_sum: n must be positive");
  }
  Integer sum(0);
  for (long i = 1; i < n; ++i) {
    sum += pow(Integer(i), static_cast<unsigned long>(m));
  }
  return sum;
}

}  // namespace binsum
