#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "msn/polynomial.hpp"
#include "msn/power_series.hpp"
#include "msn/rational.hpp"
#include "msn/stirling.hpp"

namespace msn {

// Moment generating Stirling numbers.
//
//   c(i, j, k) = sum_{r=j..i} C(r, j) (-k)^{r-j} s(i, r)         (first kind)
//   b(i, j, k) = sum_{r=0..j} C(j, r) (-1)^{j-r} (r + k)^i       (second kind)
//
// c(i, ., k) are the coefficients of the shifted falling factorial (x - k)_i,
// and (c) is, up to the j! scaling, the two-sided inverse of (b).

enum class MsnKind { msn1, msn2 };

/// c(i, j, k) by direct summation over signed Stirling numbers.
/// Zero for negative indices and for j > i.
inline Rational msn1_def(long i, long j, const Rational& k) {
  if (i < 0 || j < 0 || j > i) return 0;
  const Rational minus_k = -k;
  Rational total = 0;
  Rational k_power = 1;  // (-k)^{r-j}
  for (long r = j; r <= i; ++r) {
    total += Rational(binomial(r, j)) * k_power * Rational(stirling_first(i, r));
    k_power *= minus_k;
  }
  return total;
}

/// b(i, j, k) by its finite-difference sum, with 0^0 = 1.
/// Zero for negative indices (and vanishes for j > i).
inline Rational msn2(long i, long j, const Rational& k) {
  if (i < 0 || j < 0) return 0;
  Rational total = 0;
  for (long r = 0; r <= j; ++r) {
    Rational term = Rational(binomial(j, r)) * (Rational(r) + k).pow(i);
    if ((j - r) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

/// Triangle of c(i, j, k) or b(i, j, k) for fixed k, rows 0..n_max.
class MsnTable {
 public:
  MsnTable(MsnKind kind, Rational k, std::vector<std::vector<Rational>> rows)
      : kind_(kind), k_(std::move(k)), rows_(std::move(rows)) {}

  MsnKind kind() const { return kind_; }
  const Rational& k() const { return k_; }
  long n_max() const { return static_cast<long>(rows_.size()) - 1; }
  const std::vector<Rational>& row(long i) const { return rows_.at(i); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  /// Zero outside 0 <= j <= i; throws for i > n_max.
  const Rational& at(long i, long j) const {
    static const Rational zero = 0;
    if (i < 0 || j < 0 || j > i) return zero;
    if (i > n_max()) throw usage_error("MSN table index beyond n_max");
    return rows_[i][j];
  }

  friend bool operator==(const MsnTable&, const MsnTable&) = default;

 private:
  MsnKind kind_;
  Rational k_;
  std::vector<std::vector<Rational>> rows_;
};

/// c(i, j, k) for 0 <= j <= i <= n_max, from
///   c(i+1, j, k) = c(i, j-1, k) - (i + k) c(i, j, k),   c(0, 0, k) = 1.
inline MsnTable msn1_table(long n_max, const Rational& k) {
  if (n_max < 0) throw usage_error("MSN table requires n_max >= 0");
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n_max) + 1);
  rows[0] = {Rational(1)};
  for (long i = 0; i < n_max; ++i) {
    const auto& prev = rows[i];
    auto& next = rows[i + 1];
    next.assign(static_cast<std::size_t>(i) + 2, Rational(0));
    const Rational shift = Rational(i) + k;
    for (long j = 0; j <= i + 1; ++j) {
      Rational v = j >= 1 ? prev[j - 1] : Rational(0);
      if (j <= i) v -= shift * prev[j];
      next[j] = std::move(v);
    }
  }
  return MsnTable(MsnKind::msn1, k, std::move(rows));
}

/// b(i, j, k) for 0 <= j <= i <= n_max, entry by entry from the definition.
inline MsnTable msn2_table(long n_max, const Rational& k) {
  if (n_max < 0) throw usage_error("MSN table requires n_max >= 0");
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n_max) + 1);
  for (long i = 0; i <= n_max; ++i) {
    rows[i].reserve(static_cast<std::size_t>(i) + 1);
    for (long j = 0; j <= i; ++j) rows[i].push_back(msn2(i, j, k));
  }
  return MsnTable(MsnKind::msn2, k, std::move(rows));
}

/// G_{i,k}(x) = (x - k)(x - k - 1) ... (x - k - i + 1), expanded.
inline Polynomial ogf_poly(long i, const Rational& k) {
  if (i < 0) throw usage_error("ogf_poly requires i >= 0");
  Polynomial g = Polynomial::constant(1);
  for (long t = 0; t < i; ++t) {
    g = g * Polynomial::linear(-(k + Rational(t)), 1);
  }
  return g;
}

/// E_{j,k}(x) = (1 + x)^{-k} ln(1 + x)^j / j!, truncated at `order`.
/// Coefficient i equals c(i, j, k) / i!.
inline PowerSeries egf_series(long j, const Rational& k, long order) {
  if (j < 0) throw usage_error("egf_series requires j >= 0");
  if (order < j) throw usage_error("egf_series requires order >= j");
  PowerSeries log_power = series_log1p(order).pow(static_cast<unsigned>(j));
  return (Rational(1) / Rational(factorial(j))) *
         (log_power * series_pow_binomial(-k, order));
}

}  // namespace msn
