#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "msn/rational.hpp"

namespace msn {

using RowVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw usage_error("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static RationalMatrix from_rows(const std::vector<RowVector>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw usage_error("ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  friend RationalMatrix operator+(const RationalMatrix& a,
                                  const RationalMatrix& b) {
    check_same_shape(a, b);
    RationalMatrix out = a;
    for (std::size_t t = 0; t < out.entries_.size(); ++t) out.entries_[t] += b.entries_[t];
    return out;
  }

  friend RationalMatrix operator-(const RationalMatrix& a,
                                  const RationalMatrix& b) {
    check_same_shape(a, b);
    RationalMatrix out = a;
    for (std::size_t t = 0; t < out.entries_.size(); ++t) out.entries_[t] -= b.entries_[t];
    return out;
  }

  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw usage_error("matrix product: inner dimensions differ");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const Rational& x = a(i, l);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(l, j);
      }
    }
    return out;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << "[";
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? "; " : "");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
    }
    return os << "]";
  }

 private:
  static void check_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw usage_error("matrix shapes differ");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Gauss-Jordan elimination over the rationals. The pivot is the first row
/// at or below the diagonal with a nonzero entry; none means singular.
inline RationalMatrix mat_inverse(const RationalMatrix& a) {
  if (!a.is_square()) throw usage_error("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix work = a;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw singular_matrix_error(col);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational scale = Rational(1) / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Rational factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

inline RationalMatrix mat_pow(const RationalMatrix& a, long exponent) {
  if (!a.is_square()) throw usage_error("power of non-square matrix");
  if (exponent < 0) throw usage_error("matrix power requires exponent >= 0");
  RationalMatrix result = RationalMatrix::identity(a.rows());
  RationalMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// Row vector times matrix.
inline RowVector operator*(const RowVector& v, const RationalMatrix& a) {
  if (v.size() != a.rows()) throw usage_error("vector-matrix dimensions differ");
  RowVector out(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) out[c] += v[r] * a(r, c);
  }
  return out;
}

/// v . e, where e is the all-ones column.
inline Rational sum(const RowVector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace msn
