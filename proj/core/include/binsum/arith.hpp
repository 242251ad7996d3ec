#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace binsum {

// Violation of an exactness invariant: inexact division, zero denominator,
// or a value leaving its representable range. Never part of a normal
// verification result; it means either a caller bug or broken arithmetic.
class arithmetic_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Rational;
class Integer;

Integer divide_exact(const Integer& dividend, const Integer& divisor);
Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);
Integer pow(const Integer& base, unsigned long exponent);
Integer pow_mod(const Integer& base, const Integer& exponent, const Integer& modulus);
Integer mod_nonneg(const Integer& a, const Integer& modulus);
bool divides(const Integer& divisor, const Integer& a);
bool fits_long(const Integer& a);
long to_long(const Integer& a);

// Arbitrary-precision signed integer. Closed under +, -, *; quotients are
// only available through divide_exact(), which requires the division to be
// exact. There is deliberately no truncating operator/.
class Integer {
 public:
  Integer() = default;
  Integer(int value) : v_(value) {}
  Integer(long value) : v_(value) {}
  Integer(long long value) : v_(value) {}
  explicit Integer(const std::string& decimal) : v_(decimal) {}

  Integer& operator+=(const Integer& rhs) {
    v_ += rhs.v_;
    return *this;
  }
  Integer& operator-=(const Integer& rhs) {
    v_ -= rhs.v_;
    return *this;
  }
  Integer& operator*=(const Integer& rhs) {
    v_ *= rhs.v_;
    return *this;
  }

  friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
  friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
  friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }

  Integer operator-() const {
    Integer r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Integer& a, const Integer& b) { return a.v_ != b.v_; }
  friend bool operator<(const Integer& a, const Integer& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Integer& a, const Integer& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Integer& a, const Integer& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Integer& a, const Integer& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_negative() const { return v_.sign() < 0; }
  bool is_odd() const { return v_ % 2 != 0; }
  bool is_even() const { return v_ % 2 == 0; }
  int sign() const { return v_.sign(); }

  std::string to_string() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) {
    return os << a.v_.str();
  }

 private:
  using backend = boost::multiprecision::cpp_int;

  explicit Integer(backend v) : v_(std::move(v)) {}

  backend v_;

  friend class Rational;
  friend Integer divide_exact(const Integer&, const Integer&);
  friend Integer gcd(const Integer&, const Integer&);
  friend Integer abs(const Integer&);
  friend Integer pow(const Integer&, unsigned long);
  friend Integer pow_mod(const Integer&, const Integer&, const Integer&);
  friend Integer mod_nonneg(const Integer&, const Integer&);
  friend bool divides(const Integer&, const Integer&);
  friend bool fits_long(const Integer&);
  friend long to_long(const Integer&);
};

inline Integer divide_exact(const Integer& dividend, const Integer& divisor) {
  if (divisor.v_.is_zero()) {
    throw arithmetic_error("divide_exact: division by zero");
  }
  Integer::backend q, r;
  boost::multiprecision::divide_qr(dividend.v_, divisor.v_, q, r);
  if (!r.is_zero()) {
    throw arithmetic_error("divide_exact: " + divisor.v_.str() +
                           " does not divide " + dividend.v_.str());
  }
  return Integer(std::move(q));
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return Integer(boost::multiprecision::gcd(a.v_, b.v_));
}

inline Integer abs(const Integer& a) {
  return Integer(Integer::backend(boost::multiprecision::abs(a.v_)));
}

inline Integer pow(const Integer& base, unsigned long exponent) {
  return Integer(Integer::backend(boost::multiprecision::pow(base.v_, static_cast<unsigned>(exponent))));
}

inline Integer pow_mod(const Integer& base, const Integer& exponent, const Integer& modulus) {
  if (exponent.is_negative()) {
    throw std::invalid_argument("pow_mod: negative exponent");
  }
  if (modulus.v_ <= 0) {
    throw std::invalid_argument("pow_mod: modulus must be positive");
  }
  Integer::backend b = base.v_ % modulus.v_;
  if (b < 0) b += modulus.v_;
  return Integer(Integer::backend(boost::multiprecision::powm(b, exponent.v_, modulus.v_)));
}

// Least nonnegative residue of a modulo a positive modulus.
inline Integer mod_nonneg(const Integer& a, const Integer& modulus) {
  if (modulus.v_ <= 0) {
    throw std::invalid_argument("mod_nonneg: modulus must be positive");
  }
  Integer::backend r = a.v_ % modulus.v_;
  if (r < 0) r += modulus.v_;
  return Integer(std::move(r));
}

inline bool divides(const Integer& divisor, const Integer& a) {
  if (divisor.v_.is_zero()) return a.v_.is_zero();
  return a.v_ % divisor.v_ == 0;
}

inline bool fits_long(const Integer& a) {
  static const Integer::backend lo = (std::numeric_limits<long>::min)();
  static const Integer::backend hi = (std::numeric_limits<long>::max)();
  return a.v_ >= lo && a.v_ <= hi;
}

inline long to_long(const Integer& a) {
  if (!fits_long(a)) {
    throw arithmetic_error("to_long: value out of range: " + a.to_string());
  }
  return a.v_.convert_to<long>();
}

// Exact rational in canonical form: denominator positive, gcd(|num|, den) = 1
// after every operation. Equality is structural equality of the canonical form.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : v_(value) {}
  Rational(long value) : v_(value) {}
  Rational(long long value) : v_(value) {}
  Rational(const Integer& value) : v_(value.v_) {}
  Rational(const Integer& num, const Integer& den) {
    if (den.v_.is_zero()) {
      throw arithmetic_error("Rational: zero denominator");
    }
    if (den.v_ < 0) {
      v_ = backend(-num.v_, -den.v_);
    } else {
      v_ = backend(num.v_, den.v_);
    }
  }

  Integer num() const { return Integer(boost::multiprecision::numerator(v_)); }
  Integer den() const { return Integer(boost::multiprecision::denominator(v_)); }

  Rational& operator+=(const Rational& rhs) {
    v_ += rhs.v_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    v_ -= rhs.v_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    v_ *= rhs.v_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs) {
    if (rhs.v_.is_zero()) {
      throw arithmetic_error("Rational: division by zero");
    }
    v_ /= rhs.v_;
    return *this;
  }

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const {
    return boost::multiprecision::denominator(v_) == 1;
  }
  Integer to_integer() const {
    if (!is_integer()) {
      throw arithmetic_error("to_integer: not an integer: " + to_string());
    }
    return num();
  }

  // Canonical "num/den" form, used by the serializers.
  std::string to_string() const {
    return boost::multiprecision::numerator(v_).str() + "/" +
           boost::multiprecision::denominator(v_).str();
  }

  // Prints integers without the "/1" tail.
  friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
    if (q.is_integer()) return os << boost::multiprecision::numerator(q.v_).str();
    return os << q.to_string();
  }

 private:
  using backend = boost::multiprecision::cpp_rational;

  backend v_;
};

inline Rational pow(const Rational& base, unsigned long exponent) {
  Integer n = pow(base.num(), exponent);
  Integer d = pow(base.den(), exponent);
  return Rational(n, d);
}

}  // namespace binsum
