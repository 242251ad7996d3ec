#include "binsum/sequences.hpp"

#include <stdexcept>

#include "binsum/binomial.hpp"

namespace binsum {

void validate(const SequenceSpec& spec) {
  switch (spec.family) {
    case Family::R:
      return;
    case Family::UTerm:
      if (spec.ambient_n < 1) {
        throw std::invalid_argument("SequenceSpec: u-term family needs an ambient n >= 1");
      }
      return;
    case Family::S:
    case Family::T:
    case Family::PowerOdd:
    case Family::PowerOddAlt:
      if (spec.r < 1) {
        throw std::invalid_argument("SequenceSpec: exponent parameter r must be >= 1");
      }
      return;
  }
  throw std::invalid_argument("SequenceSpec: unknown family");
}

bool produces_integers(Family family) { return family != Family::R; }

const char* family_name(Family family) {
  switch (family) {
    case Family::S: return "S";
    case Family::T: return "T";
    case Family::R: return "R";
    case Family::PowerOdd: return "power-odd";
    case Family::PowerOddAlt: return "power-odd-alt";
    case Family::UTerm: return "u";
  }
  return "?";
}

const char* weight_name(Weight weight) {
  switch (weight) {
    case Weight::None: return "none";
    case Weight::K: return "k";
    case Weight::FourK: return "4k";
  }
  return "?";
}

bool parse_family(const std::string& token, Family& out) {
  if (token == "S" || token == "s") out = Family::S;
  else if (token == "T" || token == "t") out = Family::T;
  else if (token == "R") out = Family::R;
  else if (token == "power-odd") out = Family::PowerOdd;
  else if (token == "power-odd-alt") out = Family::PowerOddAlt;
  else if (token == "u" || token == "U") out = Family::UTerm;
  else return false;
  return true;
}

bool parse_weight(const std::string& token, Weight& out) {
  if (token == "none") out = Weight::None;
  else if (token == "k") out = Weight::K;
  else if (token == "4k") out = Weight::FourK;
  else return false;
  return true;
}

namespace {

Integer seq_ST(long n, long r, bool alternating) {
  if (n < 0) throw std::invalid_argument("sequence index must be nonnegative");
  if (r < 1) throw std::invalid_argument("exponent r must be >= 1");
  Integer acc(0);
  Integer c(1);  // C(n, k)
  for (long k = 0; k <= n; ++k) {
    Integer term = c * c * central_binomial(k) *
                   pow(Integer(2 * k + 1), static_cast<unsigned long>(r));
    if (alternating && k % 2 != 0) {
      acc -= term;
    } else {
      acc += term;
    }
    if (k < n) c = divide_exact(c * Integer(n - k), Integer(k + 1));
  }
  return acc;
}

}  // namespace

Integer seq_S(long n, long r) { return seq_ST(n, r, false); }

Integer seq_T(long n, long r) { return seq_ST(n, r, true); }

Rational seq_R(long n) {
  if (n < 0) throw std::invalid_argument("sequence index must be nonnegative");
  Rational acc;
  Integer a(1);  // C(n, k)
  Integer b(1);  // C(n+k, k)
  for (long k = 0; k <= n; ++k) {
    acc += Rational(a * b, Integer(2 * k - 1));
    if (k < n) {
      a = divide_exact(a * Integer(n - k), Integer(k + 1));
      b = divide_exact(b * Integer(n + k + 1), Integer(k + 1));
    }
  }
  return acc;
}

Integer u_term(long n, long j) {
  if (n < 1) throw std::invalid_argument("u_term: n must be positive");
  if (j < 0 || j >= n) throw std::invalid_argument("u_term: j must lie in [0, n)");
  Integer c(1);  // C(k, j), starting at k = j
  Integer sum(0);
  for (long k = j; k < n; ++k) {
    sum += Integer(2 * k - j + 1) * c * c;
    c = divide_exact(c * Integer(k + 1), Integer(k + 1 - j));
  }
  return Integer(2 * j + 1) * central_binomial(j) * sum;
}

Integer power_odd_term(long k, long r) {
  if (k < 0) throw std::invalid_argument("sequence index must be nonnegative");
  if (r < 1) throw std::invalid_argument("exponent r must be >= 1");
  return pow(Integer(2 * k + 1), static_cast<unsigned long>(2 * r - 1));
}

Integer power_odd_alt_term(long k, long r) {
  Integer v = power_odd_term(k, r);
  return (k % 2 != 0) ? -v : v;
}

Rational term(const SequenceSpec& spec, long k) {
  validate(spec);
  if (k < 0) throw std::invalid_argument("sequence index must be nonnegative");
  switch (spec.family) {
    case Family::S: return Rational(seq_S(k, spec.r));
    case Family::T: return Rational(seq_T(k, spec.r));
    case Family::R: return seq_R(k);
    case Family::PowerOdd: return Rational(power_odd_term(k, spec.r));
    case Family::PowerOddAlt: return Rational(power_odd_alt_term(k, spec.r));
    case Family::UTerm: return Rational(u_term(spec.ambient_n, k));
  }
  throw std::invalid_argument("SequenceSpec: unknown family");
}

Rational prefix_sum(const SequenceSpec& spec, long n, Weight weight) {
  validate(spec);
  if (n < 1) throw std::invalid_argument("prefix_sum: n must be positive");
  Rational acc;
  for (long k = 0; k < n; ++k) {
    Rational t = term(spec, k);
    switch (weight) {
      case Weight::None: break;
      case Weight::K: t *= Rational(k); break;
      case Weight::FourK: t *= Rational(4 * k); break;
    }
    acc += t;
  }
  return acc;
}

PrefixAccumulator::PrefixAccumulator(const SequenceSpec& spec, Weight weight)
    : spec_(spec), weight_(weight) {
  validate(spec);
  if (!produces_integers(spec.family)) {
    throw std::invalid_argument("PrefixAccumulator: integer-valued families only");
  }
  switch (spec.family) {
    case Family::S:
    case Family::T:
      exponent_ = spec.r;
      row_.push_back(Integer(1));
      break;
    case Family::PowerOdd:
    case Family::PowerOddAlt:
      exponent_ = 2 * spec.r - 1;
      break;
    default:
      break;
  }
}

Integer PrefixAccumulator::current_term() const {
  switch (spec_.family) {
    case Family::S:
    case Family::T: {
      Integer t(0);
      for (long j = 0; j <= k_; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        Integer part = row_[ju] * row_[ju] * central_[ju] * odd_pow_[ju];
        if (spec_.family == Family::T && j % 2 != 0) {
          t -= part;
        } else {
          t += part;
        }
      }
      return t;
    }
    case Family::PowerOdd:
      return odd_pow_[static_cast<std::size_t>(k_)];
    case Family::PowerOddAlt: {
      const Integer& v = odd_pow_[static_cast<std::size_t>(k_)];
      return (k_ % 2 != 0) ? -v : v;
    }
    case Family::UTerm:
      return u_term(spec_.ambient_n, k_);
    default:
      throw std::invalid_argument("PrefixAccumulator: unsupported family");
  }
}

void PrefixAccumulator::advance() {
  const bool rowful = spec_.family == Family::S || spec_.family == Family::T;
  if (exponent_ > 0) {
    odd_pow_.push_back(pow(Integer(2 * k_ + 1), static_cast<unsigned long>(exponent_)));
  }
  if (rowful) {
    central_.push_back(k_ == 0 ? Integer(1)
                               : divide_exact(central_.back() * Integer(2 * (2 * k_ - 1)),
                                              Integer(k_)));
  }

  Integer t = current_term();
  switch (weight_) {
    case Weight::None: break;
    case Weight::K: t *= Integer(k_); break;
    case Weight::FourK: t *= Integer(4 * k_); break;
  }
  acc_ += t;

  if (rowful) {
    // Extend C(k,.) to C(k+1,.) in place.
    row_.push_back(Integer(1));
    for (long j = k_; j >= 1; --j) {
      row_[static_cast<std::size_t>(j)] += row_[static_cast<std::size_t>(j - 1)];
    }
  }
  ++k_;
}

}  // namespace binsum
