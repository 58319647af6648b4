#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "msn/errors.hpp"

namespace msn {

using Integer = boost::multiprecision::cpp_int;

/// Exact signed rational number.
///
/// Values are reduced on construction: the denominator is positive, shares
/// no factor with the numerator, and zero is stored as 0/1. Equality is
/// therefore a plain comparison of the two fields.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}
  Rational(long value) : value_(value) {}
  Rational(long long value) : value_(value) {}
  Rational(const Integer& value) : value_(value) {}

  Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
      throw arithmetic_error("rational with zero denominator");
    }
    // Older Boost rejects a negative denominator outright.
    if (denominator < 0) {
      value_ = boost::multiprecision::cpp_rational(Integer(-numerator), Integer(-denominator));
    } else {
      value_ = boost::multiprecision::cpp_rational(numerator, denominator);
    }
  }

  /// Parses `[+-]digits[/digits]`. Anything else, including a zero
  /// denominator, is a usage_error.
  static Rational parse(std::string_view text) {
    auto fail = [&] {
      return usage_error("malformed rational '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
    }
    auto digits = [&](Integer& out) {
      std::size_t start = pos;
      out = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        out = out * 10 + (text[pos] - '0');
        ++pos;
      }
      return pos > start;
    };
    Integer num;
    Integer den = 1;
    if (!digits(num)) throw fail();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      if (!digits(den)) throw fail();
      if (den == 0) throw fail();
    }
    if (pos != text.size()) throw fail();
    return Rational(negative ? Integer(-num) : num, den);
  }

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// Canonical "num/den" rendering; integers render without a denominator.
  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  /// Integer power; negative exponents invert. 0^0 = 1.
  Rational pow(long exponent) const {
    if (exponent < 0) return Rational(1) / pow(-exponent);
    Rational result = 1;
    Rational base = *this;
    while (exponent > 0) {
      if (exponent & 1) result *= base;
      exponent >>= 1;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw arithmetic_error("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  boost::multiprecision::cpp_rational value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Integer factorial(long n) {
  if (n < 0) throw usage_error("factorial of negative number");
  Integer result = 1;
  for (long t = 2; t <= n; ++t) result *= t;
  return result;
}

/// C(n, r) for integer n >= 0; zero outside 0 <= r <= n.
inline Integer binomial(long n, long r) {
  if (n < 0) throw usage_error("integer binomial requires n >= 0");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Integer result = 1;
  for (long t = 1; t <= r; ++t) {
    result *= n - r + t;
    result /= t;
  }
  return result;
}

/// (x)_i = x (x-1) ... (x-i+1); the empty product (i = 0) is 1.
inline Rational falling_factorial(const Rational& x, long i) {
  if (i < 0) throw usage_error("falling factorial requires i >= 0");
  Rational result = 1;
  for (long t = 0; t < i; ++t) result *= x - Rational(t);
  return result;
}

/// Generalized binomial coefficient (alpha)_n / n!; zero for n < 0.
inline Rational binomial(const Rational& alpha, long n) {
  if (n < 0) return 0;
  return falling_factorial(alpha, n) / Rational(factorial(n));
}

/// (-1)^e for any integer e.
inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace msn

template <>
struct std::hash<msn::Rational> {
  std::size_t operator()(const msn::Rational& r) const {
    return std::hash<std::string>{}(r.str());
  }
};
