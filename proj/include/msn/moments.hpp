#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msn/numbers.hpp"
#include "msn/rational.hpp"
#include "msn/stirling.hpp"

namespace msn {

enum class MomentKind { ordinary, factorial, central };

inline std::string_view to_string(MomentKind kind) {
  switch (kind) {
    case MomentKind::ordinary: return "ordinary";
    case MomentKind::factorial: return "factorial";
    case MomentKind::central: return "central";
  }
  return "?";
}

inline MomentKind parse_moment_kind(std::string_view text) {
  if (text == "ordinary") return MomentKind::ordinary;
  if (text == "factorial") return MomentKind::factorial;
  if (text == "central") return MomentKind::central;
  throw usage_error("unknown moment kind '" + std::string(text) + "'");
}

/// Moments of orders 0..size()-1 of one kind.
///
/// values[0] is always 1. Ordinary and factorial vectors have mean ==
/// values[1]; central vectors have values[1] == 0 and carry the mean
/// separately, since it cannot be recovered from central moments.
class MomentVector {
 public:
  static MomentVector ordinary(std::vector<Rational> values) {
    return make(MomentKind::ordinary, std::move(values), std::nullopt);
  }
  static MomentVector factorial(std::vector<Rational> values) {
    return make(MomentKind::factorial, std::move(values), std::nullopt);
  }
  static MomentVector central(std::vector<Rational> values, Rational mean) {
    return make(MomentKind::central, std::move(values), std::move(mean));
  }

  /// Validating constructor. `mean` is required for central vectors; for the
  /// other kinds it must match values[1] when given.
  static MomentVector make(MomentKind kind, std::vector<Rational> values,
                           std::optional<Rational> mean) {
    if (values.empty()) throw usage_error("moment vector must contain M_0 = 1");
    if (values[0] != 1) throw usage_error("moment of order 0 must be 1, got " + values[0].str());
    MomentVector v;
    v.kind_ = kind;
    if (kind == MomentKind::central) {
      if (!mean) throw usage_error("central moment vector needs the mean");
      if (values.size() > 1 && !values[1].is_zero()) {
        throw usage_error("first central moment must be 0, got " + values[1].str());
      }
      v.mean_ = *mean;
    } else {
      Rational first = values.size() > 1 ? values[1] : Rational(0);
      if (mean && values.size() > 1 && *mean != first) {
        throw usage_error("mean " + mean->str() + " disagrees with first moment " +
                          first.str());
      }
      v.mean_ = values.size() > 1 ? first : mean.value_or(Rational(0));
    }
    v.values_ = std::move(values);
    return v;
  }

  MomentKind kind() const { return kind_; }
  const Rational& mean() const { return mean_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t m) const { return values_.at(m); }

  friend bool operator==(const MomentVector&, const MomentVector&) = default;

 private:
  MomentVector() = default;

  MomentKind kind_ = MomentKind::ordinary;
  Rational mean_;
  std::vector<Rational> values_;
};

namespace detail {

inline void require_kind(const MomentVector& v, MomentKind expected) {
  if (v.kind() != expected) {
    throw usage_error("expected " + std::string(to_string(expected)) + " moments, got " +
                      std::string(to_string(v.kind())));
  }
}

inline long top_order(const MomentVector& v) { return static_cast<long>(v.size()) - 1; }

// out_m = sum_j weight(m, j) in_j
template <typename Weight>
std::vector<Rational> lower_triangular_map(const std::vector<Rational>& in, Weight weight) {
  std::vector<Rational> out(in.size());
  for (long m = 0; m < static_cast<long>(in.size()); ++m) {
    Rational acc = 0;
    for (long j = 0; j <= m; ++j) {
      if (in[j].is_zero()) continue;
      acc += weight(m, j) * in[j];
    }
    out[m] = std::move(acc);
  }
  return out;
}

}  // namespace detail

/// M_m = sum_j b(m, j, 0) / j! F_j
inline MomentVector ordinary_from_factorial(const MomentVector& f) {
  detail::require_kind(f, MomentKind::factorial);
  const MsnTable b = msn2_table(detail::top_order(f), 0);
  auto values = detail::lower_triangular_map(f.values(), [&](long m, long j) {
    return b.at(m, j) / Rational(factorial(j));
  });
  return MomentVector::make(MomentKind::ordinary, std::move(values), f.mean());
}

/// F_m = sum_j c(m, j, 0) M_j
inline MomentVector factorial_from_ordinary(const MomentVector& mo) {
  detail::require_kind(mo, MomentKind::ordinary);
  const MsnTable c = msn1_table(detail::top_order(mo), 0);
  auto values = detail::lower_triangular_map(mo.values(),
                                             [&](long m, long j) { return c.at(m, j); });
  return MomentVector::make(MomentKind::factorial, std::move(values), mo.mean());
}

/// C_m = sum_j C(m, j) (-M_1)^{m-j} M_j
inline MomentVector central_from_ordinary(const MomentVector& mo) {
  detail::require_kind(mo, MomentKind::ordinary);
  const Rational minus_mean = -mo.mean();
  auto values = detail::lower_triangular_map(mo.values(), [&](long m, long j) {
    return Rational(binomial(m, j)) * minus_mean.pow(m - j);
  });
  // Exact arithmetic makes C_1 vanish identically.
  return MomentVector::central(std::move(values), mo.mean());
}

/// M_m = sum_r C(m, r) M_1^{m-r} C_r
inline MomentVector ordinary_from_central(const MomentVector& ce) {
  detail::require_kind(ce, MomentKind::central);
  const Rational& mean = ce.mean();
  auto values = detail::lower_triangular_map(ce.values(), [&](long m, long r) {
    return Rational(binomial(m, r)) * mean.pow(m - r);
  });
  return MomentVector::make(MomentKind::ordinary, std::move(values), mean);
}

/// C_m = sum_j b(m, j, -M_1) / j! F_j
inline MomentVector central_from_factorial(const MomentVector& f) {
  detail::require_kind(f, MomentKind::factorial);
  const MsnTable b = msn2_table(detail::top_order(f), -f.mean());
  auto values = detail::lower_triangular_map(f.values(), [&](long m, long j) {
    return b.at(m, j) / Rational(factorial(j));
  });
  return MomentVector::central(std::move(values), f.mean());
}

/// F_m = sum_j c(m, j, -M_1) C_j
inline MomentVector factorial_from_central(const MomentVector& ce) {
  detail::require_kind(ce, MomentKind::central);
  const MsnTable c = msn1_table(detail::top_order(ce), -ce.mean());
  auto values = detail::lower_triangular_map(ce.values(),
                                             [&](long m, long j) { return c.at(m, j); });
  return MomentVector::make(MomentKind::factorial, std::move(values), ce.mean());
}

/// Converts to any kind; converting to the same kind returns the input.
inline MomentVector convert(const MomentVector& v, MomentKind to) {
  using K = MomentKind;
  switch (v.kind()) {
    case K::ordinary:
      if (to == K::factorial) return factorial_from_ordinary(v);
      if (to == K::central) return central_from_ordinary(v);
      return v;
    case K::factorial:
      if (to == K::ordinary) return ordinary_from_factorial(v);
      if (to == K::central) return central_from_factorial(v);
      return v;
    case K::central:
      if (to == K::ordinary) return ordinary_from_central(v);
      if (to == K::factorial) return factorial_from_central(v);
      return v;
  }
  return v;
}

/// Ordinary moments of Poisson(lambda): M_m = sum_j S(m, j) lambda^j.
inline MomentVector poisson_moments(const Rational& lambda, long m_max) {
  if (lambda.sign() <= 0) throw usage_error("Poisson rate must be positive");
  if (m_max < 0) throw usage_error("moment order must be >= 0");
  std::vector<Rational> values;
  for (long m = 0; m <= m_max; ++m) {
    Rational acc = 0;
    for (long j = 0; j <= m; ++j) acc += Rational(stirling_second(m, j)) * lambda.pow(j);
    values.push_back(std::move(acc));
  }
  return MomentVector::ordinary(std::move(values));
}

}  // namespace msn
