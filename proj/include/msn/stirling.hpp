#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "msn/rational.hpp"

namespace msn {

enum class StirlingKind { first_signed, second };

/// Triangle of classical Stirling numbers, rows 0..n_max.
///
/// first_signed: s(i+1, j) = s(i, j-1) - i s(i, j)
/// second:       S(i+1, j) = S(i, j-1) + j S(i, j)
/// Both start from the single entry 1 at (0, 0).
class StirlingTable {
 public:
  static StirlingTable build(StirlingKind kind, long n_max) {
    if (n_max < 0) throw usage_error("Stirling table requires n_max >= 0");
    StirlingTable t;
    t.kind_ = kind;
    t.rows_.resize(static_cast<std::size_t>(n_max) + 1);
    t.rows_[0] = {Integer(1)};
    for (long i = 0; i < n_max; ++i) {
      const auto& prev = t.rows_[i];
      auto& next = t.rows_[i + 1];
      next.assign(static_cast<std::size_t>(i) + 2, Integer(0));
      for (long j = 0; j <= i + 1; ++j) {
        Integer below = j >= 1 ? prev[j - 1] : Integer(0);
        Integer same = j <= i ? prev[j] : Integer(0);
        long factor = kind == StirlingKind::first_signed ? -i : j;
        next[j] = below + factor * same;
      }
    }
    return t;
  }

  StirlingKind kind() const { return kind_; }
  long n_max() const { return static_cast<long>(rows_.size()) - 1; }

  /// Zero outside the triangle 0 <= j <= i <= n_max.
  Integer at(long i, long j) const {
    if (i < 0 || j < 0 || j > i || i > n_max()) return 0;
    return rows_[i][j];
  }

  const std::vector<Integer>& row(long i) const { return rows_.at(i); }

 private:
  StirlingKind kind_ = StirlingKind::first_signed;
  std::vector<std::vector<Integer>> rows_;
};

namespace detail {

// Shared, grow-only tables backing the single-value queries. Readers hold a
// shared_ptr to an immutable table, so a concurrent regrow never invalidates
// them.
class StirlingCache {
 public:
  std::shared_ptr<const StirlingTable> covering(StirlingKind kind, long n) {
    auto& slot = kind == StirlingKind::first_signed ? first_ : second_;
    {
      std::shared_lock lock(mutex_);
      if (slot && slot->n_max() >= n) return slot;
    }
    std::unique_lock lock(mutex_);
    if (!slot || slot->n_max() < n) {
      long size = std::max<long>(n, slot ? 2 * slot->n_max() : 32);
      slot = std::make_shared<const StirlingTable>(StirlingTable::build(kind, size));
    }
    return slot;
  }

  static StirlingCache& instance() {
    static StirlingCache cache;
    return cache;
  }

 private:
  std::shared_mutex mutex_;
  std::shared_ptr<const StirlingTable> first_;
  std::shared_ptr<const StirlingTable> second_;
};

}  // namespace detail

/// Signed Stirling number of the first kind s(i, j); 0 outside 0 <= j <= i.
inline Integer stirling_first(long i, long j) {
  if (i < 0 || j < 0 || j > i) return 0;
  return detail::StirlingCache::instance()
      .covering(StirlingKind::first_signed, i)
      ->at(i, j);
}

/// Stirling number of the second kind S(i, j); 0 outside 0 <= j <= i.
inline Integer stirling_second(long i, long j) {
  if (i < 0 || j < 0 || j > i) return 0;
  return detail::StirlingCache::instance()
      .covering(StirlingKind::second, i)
      ->at(i, j);
}

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
inline Rational harmonic(long n) {
  if (n < 0) throw usage_error("harmonic number requires n >= 0");
  Rational h = 0;
  for (long r = 1; r <= n; ++r) h += Rational(1, r);
  return h;
}

/// Unsigned r-Stirling numbers of the first kind, built from their own
/// recurrence:
///   [i, j]_r = [i-1, j-1]_r + (i-1) [i-1, j]_r   for i > r,
///   [r, j]_r = delta(j, r),  [i, j]_r = 0 for i < r.
/// Rows below r are kept (all zero) so indexing is uniform over 0..n_max.
class RStirlingTable {
 public:
  static RStirlingTable build(long r, long n_max) {
    if (r < 0) throw usage_error("r-Stirling numbers require r >= 0");
    if (n_max < 0) throw usage_error("r-Stirling table requires n_max >= 0");
    RStirlingTable t;
    t.r_ = r;
    t.rows_.resize(static_cast<std::size_t>(n_max) + 1);
    for (long i = 0; i <= n_max; ++i) {
      auto& row = t.rows_[i];
      row.assign(static_cast<std::size_t>(i) + 1, Integer(0));
      if (i < r) continue;
      if (i == r) {
        row[r] = 1;
        continue;
      }
      const auto& prev = t.rows_[i - 1];
      for (long j = 1; j <= i; ++j) {
        Integer same = j <= i - 1 ? prev[j] : Integer(0);
        row[j] = prev[j - 1] + (i - 1) * same;
      }
    }
    return t;
  }

  long r() const { return r_; }
  long n_max() const { return static_cast<long>(rows_.size()) - 1; }

  Integer at(long i, long j) const {
    if (i < 0 || j < 0 || j > i || i > n_max()) return 0;
    return rows_[i][j];
  }

  const std::vector<Integer>& row(long i) const { return rows_.at(i); }

 private:
  long r_ = 0;
  std::vector<std::vector<Integer>> rows_;
};

inline Integer r_stirling_first(long i, long j, long r) {
  if (r < 0) throw usage_error("r-Stirling numbers require r >= 0");
  if (i < 0 || j < 0 || j > i) return 0;
  return RStirlingTable::build(r, i).at(i, j);
}

}  // namespace msn
