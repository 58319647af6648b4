#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "msn/rational.hpp"

namespace msn {

/// Dense univariate polynomial with rational coefficients.
///
/// coeffs()[p] is the coefficient of x^p. Trailing zeros are stripped, so the
/// zero polynomial has no coefficients and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    trim();
  }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
  // a + b x
  static Polynomial linear(const Rational& a, const Rational& b) {
    return Polynomial({a, b});
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coeff(long power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  /// this(inner(x)) by Horner's scheme.
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * inner + constant(*it);
    }
    return acc;
  }

  Polynomial pow(unsigned exponent) const {
    Polynomial result = constant(1);
    for (unsigned t = 0; t < exponent; ++t) result = result * *this;
    return result;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t p = 0; p < a.coeffs_.size(); ++p) out[p] += a.coeffs_[p];
    for (std::size_t p = 0; p < b.coeffs_.size(); ++p) out[p] += b.coeffs_[p];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> out = a.coeffs_;
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t p = 0; p < a.coeffs_.size(); ++p) {
      if (a.coeffs_[p].is_zero()) continue;
      for (std::size_t q = 0; q < b.coeffs_.size(); ++q) {
        out[p + q] += a.coeffs_[p] * b.coeffs_[q];
      }
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    return constant(s) * a;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (long d = p.degree(); d >= 0; --d) {
      const Rational& c = p.coeffs_[static_cast<std::size_t>(d)];
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      os << "(" << c << ")";
      if (d > 0) os << "x^" << d;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  return a * b;
}

}  // namespace msn
