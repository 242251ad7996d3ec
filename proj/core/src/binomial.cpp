#include "binsum/binomial.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace binsum {
namespace {

constexpr long kRowCacheLimit = 1200;
constexpr long kCentralCacheLimit = 1 << 16;

// Rows 0..published-1 are complete and never change afterwards, so the
// fast path can read them without holding the growth mutex.
class PascalRowCache {
 public:
  PascalRowCache() : rows_(kRowCacheLimit + 1) {}

  const std::vector<Integer>& row(long n) {
    if (n >= published_.load(std::memory_order_acquire)) grow(n);
    return rows_[static_cast<std::size_t>(n)];
  }

 private:
  void grow(long n) {
    std::lock_guard<std::mutex> lock(mu_);
    long have = published_.load(std::memory_order_relaxed);
    for (long i = have; i <= n; ++i) {
      auto& r = rows_[static_cast<std::size_t>(i)];
      r.resize(static_cast<std::size_t>(i) + 1);
      r[0] = 1;
      r[static_cast<std::size_t>(i)] = 1;
      const auto& prev = rows_[static_cast<std::size_t>(i - 1)];
      for (long j = 1; j < i; ++j) {
        r[static_cast<std::size_t>(j)] =
            prev[static_cast<std::size_t>(j - 1)] + prev[static_cast<std::size_t>(j)];
      }
      published_.store(i + 1, std::memory_order_release);
    }
  }

  std::vector<std::vector<Integer>> rows_;
  std::atomic<long> published_{0};
  std::mutex mu_;
};

class CentralBinomialCache {
 public:
  CentralBinomialCache() : values_(kCentralCacheLimit + 1) {}

  const Integer& value(long k) {
    if (k >= published_.load(std::memory_order_acquire)) grow(k);
    return values_[static_cast<std::size_t>(k)];
  }

 private:
  void grow(long k) {
    std::lock_guard<std::mutex> lock(mu_);
    long have = published_.load(std::memory_order_relaxed);
    if (have == 0) {
      values_[0] = 1;
      have = 1;
      published_.store(1, std::memory_order_release);
    }
    for (long i = have; i <= k; ++i) {
      // C(2i, i) = C(2i-2, i-1) * 2(2i-1) / i
      values_[static_cast<std::size_t>(i)] = divide_exact(
          values_[static_cast<std::size_t>(i - 1)] * Integer(2 * (2 * i - 1)), Integer(i));
      published_.store(i + 1, std::memory_order_release);
    }
  }

  std::vector<Integer> values_;
  std::atomic<long> published_{0};
  std::mutex mu_;
};

PascalRowCache& pascal_cache() {
  static PascalRowCache cache;
  return cache;
}

CentralBinomialCache& central_cache() {
  static CentralBinomialCache cache;
  return cache;
}

// Falling-factorial product for tops outside the cache range.
Integer binomial_product(const Integer& x, long m) {
  Integer result(1);
  for (long i = 0; i < m; ++i) {
    result = divide_exact(result * (x - Integer(i)), Integer(i + 1));
  }
  return result;
}

}  // namespace

Integer binomial(const Integer& x, long m) {
  if (m < 0) {
    throw std::invalid_argument("binomial: lower index must be nonnegative");
  }
  if (m == 0) return Integer(1);
  if (x.is_negative()) {
    // C(x, m) = (-1)^m C(m - x - 1, m)
    Integer v = binomial(Integer(m) - x - Integer(1), m);
    return (m % 2 != 0) ? -v : v;
  }
  if (x < Integer(m)) return Integer(0);
  if (x <= Integer(kRowCacheLimit)) {
    return pascal_cache().row(to_long(x))[static_cast<std::size_t>(m)];
  }
  return binomial_product(x, m);
}

Rational gen_binomial(const Rational& x, long m) {
  if (m < 0) {
    throw std::invalid_argument("gen_binomial: lower index must be nonnegative");
  }
  if (x.is_integer()) return Rational(binomial(x.to_integer(), m));
  Rational result(1);
  for (long i = 0; i < m; ++i) {
    result *= x - Rational(i);
    result /= Rational(i + 1);
  }
  return result;
}

Integer central_binomial(long k) {
  if (k < 0) {
    throw std::invalid_argument("central_binomial: index must be nonnegative");
  }
  if (k <= kCentralCacheLimit) return central_cache().value(k);
  return binomial_product(Integer(2 * k), k);
}

Integer catalan(long k) {
  if (k < 0) {
    throw std::invalid_argument("catalan: index must be nonnegative");
  }
  return divide_exact(central_binomial(k), Integer(k + 1));
}

void ensure_binomial_rows(long n) {
  if (n < 0) return;
  pascal_cache().row(std::min(n, kRowCacheLimit));
}

void ensure_central_binomials(long k) {
  if (k < 0) return;
  central_cache().value(std::min(k, kCentralCacheLimit));
}

long binomial_row_cache_limit() { return kRowCacheLimit; }

}  // namespace binsum
