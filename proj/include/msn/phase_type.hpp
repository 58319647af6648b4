#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "msn/matrix.hpp"
#include "msn/moments.hpp"
#include "msn/numbers.hpp"
#include "msn/rational.hpp"

namespace msn {

/// Discrete phase-type distribution PH(p, P) on {1, 2, ...}.
///
/// P is the substochastic transition block between transient phases and p
/// the initial distribution over them. p sums to 1, so P(X = 0) = 0.
class PhaseType {
 public:
  PhaseType(RowVector initial, RationalMatrix transitions)
      : p_(std::move(initial)), P_(std::move(transitions)) {
    const std::size_t d = p_.size();
    if (d == 0) throw usage_error("phase-type distribution needs at least one phase");
    if (P_.rows() != d || P_.cols() != d) {
      throw usage_error("transition matrix must be " + std::to_string(d) + "x" +
                        std::to_string(d));
    }
    for (const auto& x : p_) {
      if (x.sign() < 0) throw usage_error("initial vector has a negative entry");
    }
    if (sum(p_) != 1) throw usage_error("initial vector must sum to 1");
    bool leaks = false;
    for (std::size_t r = 0; r < d; ++r) {
      Rational row_total = 0;
      for (std::size_t c = 0; c < d; ++c) {
        if (P_(r, c).sign() < 0) throw usage_error("transition matrix has a negative entry");
        row_total += P_(r, c);
      }
      if (row_total > 1) {
        throw usage_error("transition matrix row " + std::to_string(r) + " sums above 1");
      }
      if (row_total < 1) leaks = true;
    }
    if (!leaks) throw usage_error("transition matrix is not substochastic: no row sums below 1");
  }

  const RowVector& initial() const { return p_; }
  const RationalMatrix& transitions() const { return P_; }
  std::size_t phases() const { return p_.size(); }

  /// (I - P)^{-1}; throws singular_matrix_error when absorption is not certain.
  RationalMatrix fundamental() const {
    return mat_inverse(RationalMatrix::identity(phases()) - P_);
  }

  /// Largest row sum of P. Bounds p P^n e above by this to the power n.
  Rational max_row_sum() const {
    Rational best = 0;
    for (std::size_t r = 0; r < phases(); ++r) {
      Rational row_total = 0;
      for (std::size_t c = 0; c < phases(); ++c) row_total += P_(r, c);
      if (row_total > best) best = row_total;
    }
    return best;
  }

 private:
  RowVector p_;
  RationalMatrix P_;
};

/// F_m = m! p P^{m-1} (I - P)^{-m} e, m >= 1.
inline Rational ph_factorial_moment(const PhaseType& x, long m) {
  if (m < 1) throw usage_error("phase-type factorial moment needs m >= 1");
  const RationalMatrix n = x.fundamental();
  RowVector v = x.initial() * mat_pow(x.transitions(), m - 1);
  v = v * mat_pow(n, m);
  return Rational(factorial(m)) * sum(v);
}

/// M_m = sum_r b(m, r, 1) p (P (I - P)^{-1})^r e.
inline Rational ph_ordinary_moment(const PhaseType& x, long m) {
  if (m < 0) throw usage_error("moment order must be >= 0");
  const RationalMatrix step = x.transitions() * x.fundamental();
  Rational total = 0;
  RowVector v = x.initial();  // p (P N)^r
  for (long r = 0; r <= m; ++r) {
    total += msn2(m, r, 1) * sum(v);
    if (r < m) v = v * step;
  }
  return total;
}

/// Moments of orders 0..m_max of the requested kind.
inline MomentVector ph_moments(const PhaseType& x, MomentKind kind, long m_max) {
  if (m_max < 0) throw usage_error("moment order must be >= 0");
  if (kind == MomentKind::factorial) {
    std::vector<Rational> values{1};
    for (long m = 1; m <= m_max; ++m) values.push_back(ph_factorial_moment(x, m));
    return MomentVector::factorial(std::move(values));
  }
  std::vector<Rational> values;
  for (long m = 0; m <= m_max; ++m) values.push_back(ph_ordinary_moment(x, m));
  MomentVector ordinary = MomentVector::ordinary(std::move(values));
  if (kind == MomentKind::central) {
    if (m_max == 0) return MomentVector::central({1}, ph_ordinary_moment(x, 1));
    return central_from_ordinary(ordinary);
  }
  return ordinary;
}

/// Mass function on 1..support_max plus the mass beyond it.
struct TruncatedPmf {
  long support_max = 0;
  std::vector<Rational> probs;  // probs[n - 1] = P(X = n)
  Rational tail_mass;

  static TruncatedPmf make(std::vector<Rational> probs, Rational tail_mass) {
    Rational total = tail_mass;
    for (const auto& q : probs) {
      if (q.sign() < 0) throw usage_error("negative probability");
      total += q;
    }
    if (tail_mass.sign() < 0) throw usage_error("negative tail mass");
    if (total != 1) throw usage_error("probabilities and tail do not sum to 1");
    TruncatedPmf pmf;
    pmf.support_max = static_cast<long>(probs.size());
    pmf.probs = std::move(probs);
    pmf.tail_mass = std::move(tail_mass);
    return pmf;
  }
};

/// P(X = n) = p P^{n-1} (I - P) e for n = 1..n_max; tail = p P^{n_max} e.
inline TruncatedPmf ph_pmf(const PhaseType& x, long n_max) {
  if (n_max < 1) throw usage_error("pmf truncation needs n_max >= 1");
  const RationalMatrix exit_rates =
      RationalMatrix::identity(x.phases()) - x.transitions();
  std::vector<Rational> probs;
  probs.reserve(static_cast<std::size_t>(n_max));
  RowVector v = x.initial();  // p P^{n-1}
  for (long n = 1; n <= n_max; ++n) {
    probs.push_back(sum(v * exit_rates));
    v = v * x.transitions();
  }
  return TruncatedPmf::make(std::move(probs), sum(v));
}

/// Direct sums over a truncated mass function. partial_sums[m] is
/// sum_{n <= support_max} w_m(n) P(X = n) with w_m(n) = n^m, (n)_m or
/// (n - center)^m; the mass beyond support_max is reported, not estimated.
struct OracleMoments {
  MomentKind kind = MomentKind::ordinary;
  Rational center;
  std::vector<Rational> partial_sums;
  Rational tail_mass;
};

/// `center` applies to central sums only and defaults to the truncated mean.
inline OracleMoments oracle_moments(const TruncatedPmf& pmf, MomentKind kind, long m_max,
                                    std::optional<Rational> center = std::nullopt) {
  if (m_max < 0) throw usage_error("moment order must be >= 0");
  OracleMoments out;
  out.kind = kind;
  out.tail_mass = pmf.tail_mass;
  if (kind == MomentKind::central) {
    if (center) {
      out.center = *center;
    } else {
      Rational mean = 0;
      for (long n = 1; n <= pmf.support_max; ++n) mean += Rational(n) * pmf.probs[n - 1];
      out.center = mean;
    }
  }
  out.partial_sums.assign(static_cast<std::size_t>(m_max) + 1, Rational(0));
  for (long n = 1; n <= pmf.support_max; ++n) {
    const Rational& q = pmf.probs[n - 1];
    if (q.is_zero()) continue;
    Rational base = kind == MomentKind::central ? Rational(n) - out.center : Rational(n);
    Rational weight = 1;
    for (long m = 0; m <= m_max; ++m) {
      out.partial_sums[m] += weight * q;
      if (kind == MomentKind::factorial) {
        weight *= Rational(n - m);
      } else {
        weight *= base;
      }
    }
  }
  return out;
}

/// Upper bound on sum_{n > support_max} n^m decay^{n-1}.
///
/// If P(X = n) <= decay^{n-1} (true for phase-type with decay = max row sum
/// of P), this bounds the ordinary and factorial moment mass missing from
/// oracle_moments. Requires the term ratio at support_max + 1 to be below 1.
inline Rational power_tail_bound(long support_max, long m, const Rational& decay) {
  if (support_max < 0 || m < 0) throw usage_error("tail bound needs nonnegative arguments");
  if (decay.sign() < 0 || decay >= 1) throw usage_error("tail bound needs 0 <= decay < 1");
  const long first = support_max + 1;
  const Rational ratio = Rational(first + 1, first).pow(m) * decay;
  if (ratio >= 1) throw usage_error("tail bound: truncation too shallow for this order");
  return Rational(first).pow(m) * decay.pow(first - 1) / (Rational(1) - ratio);
}

}  // namespace msn
