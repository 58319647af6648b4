#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "msn/rational.hpp"

namespace msn {

/// Formal power series truncated at order N: coefficients of x^0 .. x^N.
///
/// Arithmetic is truncated eagerly and both operands must share the order.
class PowerSeries {
 public:
  explicit PowerSeries(long order) : coeffs_(checked_size(order)) {}

  PowerSeries(long order, std::vector<Rational> coeffs)
      : coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked_size(order));
  }

  static PowerSeries one(long order) {
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](long n) const {
    return coeffs_.at(static_cast<std::size_t>(n));
  }

  PowerSeries pow(unsigned exponent) const {
    PowerSeries result = one(order());
    for (unsigned t = 0; t < exponent; ++t) result = result * *this;
    return result;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    check_orders(a, b);
    PowerSeries out = a;
    for (std::size_t n = 0; n < b.coeffs_.size(); ++n) out.coeffs_[n] += b.coeffs_[n];
    return out;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    check_orders(a, b);
    PowerSeries out(a.order());
    const std::size_t size = a.coeffs_.size();
    for (std::size_t p = 0; p < size; ++p) {
      if (a.coeffs_[p].is_zero()) continue;
      for (std::size_t q = 0; p + q < size; ++q) {
        out.coeffs_[p + q] += a.coeffs_[p] * b.coeffs_[q];
      }
    }
    return out;
  }

  friend PowerSeries operator*(const Rational& s, const PowerSeries& a) {
    PowerSeries out = a;
    for (auto& c : out.coeffs_) c *= s;
    return out;
  }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  static std::size_t checked_size(long order) {
    if (order < 0) throw usage_error("power series order must be >= 0");
    return static_cast<std::size_t>(order) + 1;
  }

  static void check_orders(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) {
      throw usage_error("power series order mismatch: " +
                        std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
    }
  }

  std::vector<Rational> coeffs_;
};

/// ln(1 + x) = sum_{n>=1} (-1)^{n+1} x^n / n, truncated at `order`.
inline PowerSeries series_log1p(long order) {
  PowerSeries s(order);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (long n = 1; n <= order; ++n) c[n] = Rational(parity_sign(n + 1), n);
  return PowerSeries(order, std::move(c));
}

/// (1 + x)^exponent via the generalized binomial series sum C(exponent, n) x^n.
inline PowerSeries series_pow_binomial(const Rational& exponent, long order) {
  PowerSeries probe(order);  // validates order
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  Rational term = 1;
  for (long n = 0; n <= order; ++n) {
    c[n] = term;
    term = term * (exponent - Rational(n)) / Rational(n + 1);
  }
  return PowerSeries(order, std::move(c));
}

}  // namespace msn
