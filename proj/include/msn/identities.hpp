#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "msn/numbers.hpp"
#include "msn/polynomial.hpp"
#include "msn/rational.hpp"
#include "msn/stirling.hpp"

namespace msn {

/// One grid point where the two sides of an identity disagree.
struct IdentityFailure {
  std::string clause;                                  // sub-statement label
  std::vector<std::pair<std::string, long>> indices;   // e.g. {"i", 3}, {"j", 1}
  std::vector<Rational> k_values;
  Rational lhs;
  Rational rhs;

  friend bool operator==(const IdentityFailure&, const IdentityFailure&) = default;
};

struct IdentityReport {
  std::string identity_name;
  std::string parameter_ranges;
  long checked_count = 0;
  std::vector<IdentityFailure> failures;

  bool pass() const { return failures.empty(); }
};

/// Stable names of every identity the engine knows, in report order.
inline constexpr std::array<std::string_view, 16> identity_catalog = {
    "lemma_basic",          "ogf_split",
    "power_expansion",      "closed_forms",
    "harmonic_closed_form", "sum_eval",
    "sum_corollary",        "recursions",
    "r_stirling_match",     "inversion",
    "cross_inverse",        "convolution",
    "convolution_corollary", "binomial_shift",
    "binomial_shift_corollary", "egf_match",
};

/// Single clauses that can be checked by name but are already covered by a
/// catalog entry, so `verify_all` does not repeat them.
inline constexpr std::array<std::string_view, 1> identity_extras = {"row_sum_shift"};

inline bool is_catalog_identity(std::string_view name) {
  return std::find(identity_catalog.begin(), identity_catalog.end(), name) !=
         identity_catalog.end();
}

inline bool is_known_identity(std::string_view name) {
  return is_catalog_identity(name) ||
         std::find(identity_extras.begin(), identity_extras.end(), name) !=
             identity_extras.end();
}

using KPair = std::pair<Rational, Rational>;

namespace detail {

inline std::string join_rationals(const std::vector<Rational>& values) {
  std::ostringstream os;
  os << "{";
  for (std::size_t t = 0; t < values.size(); ++t) os << (t ? ", " : "") << values[t];
  os << "}";
  return os.str();
}

inline std::string join_pairs(const std::vector<KPair>& pairs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    os << (t ? ", " : "") << "(" << pairs[t].first << ", " << pairs[t].second << ")";
  }
  os << "}";
  return os.str();
}

// Evaluates both sides of every catalog identity over a finite grid.
// MSN values come from the defining sums (memoized per k), so every identity
// is checked against the definition rather than against another identity.
class IdentityEngine {
 public:
  IdentityEngine(long n_max, std::vector<Rational> ks, std::vector<KPair> pairs,
                 bool lenient)
      : n_(n_max), ks_(std::move(ks)), pairs_(std::move(pairs)), lenient_(lenient) {
    if (n_ < 0) throw usage_error("identity verification requires n_max >= 0");
  }

  IdentityReport run(std::string_view name) {
    report_ = IdentityReport{};
    report_.identity_name = std::string(name);
    using Method = void (IdentityEngine::*)();
    static const std::map<std::string_view, Method> dispatch = {
        {"lemma_basic", &IdentityEngine::lemma_basic},
        {"ogf_split", &IdentityEngine::ogf_split},
        {"power_expansion", &IdentityEngine::power_expansion},
        {"closed_forms", &IdentityEngine::closed_forms},
        {"harmonic_closed_form", &IdentityEngine::harmonic_closed_form},
        {"sum_eval", &IdentityEngine::sum_eval},
        {"sum_corollary", &IdentityEngine::sum_corollary},
        {"recursions", &IdentityEngine::recursions},
        {"r_stirling_match", &IdentityEngine::r_stirling_match},
        {"inversion", &IdentityEngine::inversion},
        {"cross_inverse", &IdentityEngine::cross_inverse},
        {"convolution", &IdentityEngine::convolution},
        {"convolution_corollary", &IdentityEngine::convolution_corollary},
        {"binomial_shift", &IdentityEngine::binomial_shift},
        {"binomial_shift_corollary", &IdentityEngine::binomial_shift_corollary},
        {"egf_match", &IdentityEngine::egf_match},
        {"row_sum_shift", &IdentityEngine::row_sum_shift},
    };
    auto it = dispatch.find(name);
    if (it == dispatch.end()) {
      throw usage_error("unknown identity '" + std::string(name) + "'");
    }
    (this->*(it->second))();
    std::sort(report_.failures.begin(), report_.failures.end(),
              [](const IdentityFailure& a, const IdentityFailure& b) {
                return std::tie(a.clause, a.indices, a.k_values) <
                       std::tie(b.clause, b.indices, b.k_values);
              });
    return std::move(report_);
  }

 private:
  using Indices = std::vector<std::pair<std::string, long>>;

  // ---- memoized number families -------------------------------------------

  const Rational& c(long i, long j, const Rational& k) {
    static const Rational zero = 0;
    if (i < 0 || j < 0 || j > i) return zero;
    auto& rows = c_cache_[k];
    while (static_cast<long>(rows.size()) <= i) {
      long row = static_cast<long>(rows.size());
      std::vector<Rational> values;
      values.reserve(static_cast<std::size_t>(row) + 1);
      for (long col = 0; col <= row; ++col) values.push_back(msn1_def(row, col, k));
      rows.push_back(std::move(values));
    }
    return rows[i][j];
  }

  const Rational& b(long i, long j, const Rational& k) {
    static const Rational zero = 0;
    if (i < 0 || j < 0 || j > i) return zero;
    auto& rows = b_cache_[k];
    while (static_cast<long>(rows.size()) <= i) {
      long row = static_cast<long>(rows.size());
      std::vector<Rational> values;
      for (long col = 0; col <= row; ++col) values.push_back(msn2(row, col, k));
      rows.push_back(std::move(values));
    }
    return rows[i][j];
  }

  static Rational s(long i, long j) { return Rational(stirling_first(i, j)); }
  static Rational S(long i, long j) { return Rational(stirling_second(i, j)); }
  static Rational fact(long n) { return Rational(factorial(n)); }
  static Rational choose(long n, long r) { return Rational(binomial(n, r)); }

  // G_{i,k}(x) = sum_r c(i, r, k) x^r
  Polynomial G(long i, const Rational& k) {
    std::vector<Rational> coeffs;
    for (long r = 0; r <= i; ++r) coeffs.push_back(c(i, r, k));
    return Polynomial(std::move(coeffs));
  }

  // F_i(x) = sum_r s(i, r) x^r
  static Polynomial F(long i) {
    std::vector<Rational> coeffs;
    for (long r = 0; r <= i; ++r) coeffs.push_back(s(i, r));
    return Polynomial(std::move(coeffs));
  }

  // ---- recording ----------------------------------------------------------

  void check(const char* clause, Indices indices, std::vector<Rational> ks,
             const Rational& lhs, const Rational& rhs) {
    ++report_.checked_count;
    if (lhs == rhs) return;
    report_.failures.push_back(
        {clause, std::move(indices), std::move(ks), lhs, rhs});
  }

  // Polynomial identities are compared coefficient by coefficient so that a
  // failure names the offending power.
  void check_poly(const char* clause, Indices indices, std::vector<Rational> ks,
                  const Polynomial& lhs, const Polynomial& rhs) {
    ++report_.checked_count;
    if (lhs == rhs) return;
    long top = std::max(lhs.degree(), rhs.degree());
    for (long p = 0; p <= top; ++p) {
      if (lhs.coeff(p) == rhs.coeff(p)) continue;
      Indices at = indices;
      at.emplace_back("power", p);
      report_.failures.push_back({clause, std::move(at), ks, lhs.coeff(p), rhs.coeff(p)});
    }
  }

  void describe(std::string text) { report_.parameter_ranges = std::move(text); }

  std::string grid() const {
    return "0 <= j <= i <= " + std::to_string(n_) + "; k in " + join_rationals(ks_);
  }

  std::string pair_grid() const {
    return "0 <= j <= i <= " + std::to_string(n_) + "; (k1, k2) in " + join_pairs(pairs_);
  }

  // Restricts k to integers satisfying `admissible`. Outside the lenient
  // (verify-all) mode an inadmissible k is a usage error.
  std::vector<Rational> integer_ks(const char* what,
                                   const std::function<bool(const Rational&)>& admissible,
                                   std::vector<Rational>& skipped) const {
    std::vector<Rational> out;
    for (const auto& k : ks_) {
      if (k.is_integer() && admissible(k)) {
        out.push_back(k);
      } else if (lenient_) {
        skipped.push_back(k);
      } else {
        throw usage_error(std::string(what) + " is only defined for " +
                          "integer k satisfying its range; got k = " + k.str());
      }
    }
    return out;
  }

  // ---- catalog ------------------------------------------------------------

  void lemma_basic() {
    describe(grid() + "; clause a uses k = 0, clause b checks degree of G_{i,k}");
    for (long i = 0; i <= n_; ++i) {
      for (long j = 0; j <= n_; ++j) check("a", {{"i", i}, {"j", j}}, {0}, c(i, j, 0), s(i, j));
    }
    for (const auto& k : ks_) {
      for (long i = 0; i <= n_; ++i) {
        Polynomial g = ogf_poly(i, k);
        for (long j = i + 1; j <= n_; ++j) {
          check("b", {{"i", i}, {"j", j}}, {k}, g.coeff(j), 0);
        }
        check("c", {{"i", i}}, {k}, c(i, i, k), 1);
        if (i + 1 <= n_) {
          Rational shift = k * Rational(i + 1);
          check("d", {{"i", i}}, {k}, c(i + 1, i, k), s(i + 1, i) - shift);
          check("d'", {{"i", i}}, {k}, c(i + 1, i, k), -choose(i + 1, 2) - shift);
        }
      }
    }
  }

  void ogf_split() {
    describe(grid() + "; clauses b, c use i + n <= " + std::to_string(n_) +
             "; clauses e, f take integer q in 0.." + std::to_string(n_) + " for k");
    for (const auto& k : ks_) {
      const Polynomial x_minus_k = Polynomial::linear(-k, 1);
      for (long i = 0; i <= n_; ++i) {
        Polynomial g = G(i, k);
        check_poly("a", {{"i", i}}, {k}, g, F(i).compose(x_minus_k));
        check_poly("a'", {{"i", i}}, {k}, g, ogf_poly(i, k));
        for (long n = 0; i + n <= n_; ++n) {
          check_poly("b", {{"i", i}, {"n", n}}, {k}, G(i + n, k),
                     G(n, k) * G(i, k + Rational(n)));
        }
        if (i + 1 <= n_) {
          check_poly("c", {{"i", i}}, {k}, G(i + 1, k), G(1, k) * G(i, k + 1));
        }
        check_poly("d", {{"i", i}}, {k}, g * Polynomial::linear(-k - Rational(i), 1),
                   G(i, k + 1) * x_minus_k);
      }
    }
    for (long q = 0; q <= n_; ++q) {
      for (long i = 0; i <= n_; ++i) {
        check_poly("e", {{"i", i}, {"q", q}}, {}, G(i, q) * F(q), G(q, i) * F(i));
        check_poly("f", {{"i", i}, {"q", q}}, {}, F(i + q), F(q) * G(i, q));
      }
    }
  }

  void power_expansion() {
    describe(grid());
    for (const auto& k : ks_) {
      const Polynomial x_minus_k = Polynomial::linear(-k, 1);
      for (long i = 0; i <= n_; ++i) {
        Polynomial rhs;
        for (long r = 0; r <= i; ++r) rhs = rhs + S(i, r) * G(r, k);
        check_poly("", {{"i", i}}, {k}, x_minus_k.pow(static_cast<unsigned>(i)), rhs);
      }
    }
  }

  void closed_forms() {
    describe(grid() + "; clauses b, d, e use k = 1 and clause f uses k = -1 "
             "(clause c is harmonic_closed_form)");
    for (const auto& k : ks_) {
      for (long i = 0; i <= n_; ++i) {
        check("a", {{"i", i}}, {k}, c(i, 0, k), falling_factorial(-k, i));
      }
    }
    for (long i = 0; i <= n_; ++i) {
      check("b", {{"i", i}}, {1}, c(i, 0, 1), Rational(parity_sign(i)) * fact(i));
      check("d", {{"i", i}}, {1}, c(i, 1, 1),
            Rational(parity_sign(i + 1)) * fact(i) * harmonic(i));
      for (long j = 1; j <= i + 1; ++j) {
        check("e", {{"i", i}, {"j", j}}, {1}, c(i, j - 1, 1), s(i + 1, j));
      }
      for (long j = 0; j <= i + 1; ++j) {
        check("f", {{"i", i}, {"j", j}}, {-1}, c(i + 1, j, -1), s(i, j - 1) + s(i, j));
      }
    }
  }

  void harmonic_closed_form() {
    std::vector<Rational> skipped;
    auto ks = integer_ks("harmonic_closed_form", [](const Rational& k) { return k >= 1; },
                         skipped);
    std::string text = "0 <= i <= " + std::to_string(n_) + "; integer k >= 1 in " +
                       join_rationals(ks);
    if (!skipped.empty()) text += "; skipped k " + join_rationals(skipped);
    describe(text);
    for (const auto& k : ks) {
      long kk = static_cast<long>(k.numerator());
      for (long i = 0; i <= n_; ++i) {
        Rational rhs = Rational(parity_sign(i + 1)) * choose(kk + i - 1, i) * fact(i) *
                       (harmonic(kk + i - 1) - harmonic(kk - 1));
        check("c", {{"i", i}}, {k}, c(i, 1, k), rhs);
      }
    }
  }

  void sum_eval() {
    describe(pair_grid() + "; right side is (k2 - k1)_i");
    for (const auto& [k1, k2] : pairs_) {
      for (long i = 0; i <= n_; ++i) {
        Rational lhs = 0;
        for (long r = 0; r <= i; ++r) lhs += c(i, r, k1) * k2.pow(r);
        check("", {{"i", i}}, {k1, k2}, lhs, falling_factorial(k2 - k1, i));
      }
    }
  }

  Rational row_sum(long i, const Rational& k, const Rational& base) {
    Rational total = 0;
    Rational power = 1;
    for (long r = 0; r <= i; ++r) {
      total += c(i, r, k) * power;
      power *= base;
    }
    return total;
  }

  void sum_corollary() {
    describe(grid() + "; clause c takes j in {0.." + std::to_string(n_) +
             "} and every k; clause e takes m in {k-2..k+i+1} and integers in [-" +
             std::to_string(n_) + ", " + std::to_string(n_) +
             "]; clause f takes k in the k set and integers in [-i-1, 3]; "
             "e, f compare 0/1 truth values");
    std::vector<Rational> reals = ks_;
    for (long j = 0; j <= n_; ++j) reals.emplace_back(j);

    for (long i = 0; i <= n_; ++i) {
      check("b", {{"i", i}}, {2}, row_sum(i, 2, 1), Rational(parity_sign(i)) * fact(i));
      check("g", {{"i", i}}, {2}, c(i, 0, 2), Rational(parity_sign(i)) * fact(i + 1));
    }
    for (const auto& k : ks_) {
      for (long i = 0; i <= n_; ++i) {
        check("a", {{"i", i}}, {k}, row_sum(i, k, 1), c(i, 0, k - 1));
        for (const auto& j : reals) {
          check("c", {{"i", i}}, {k, j}, row_sum(i, k, j + k), falling_factorial(j, i));
        }
        check("d", {{"i", i}}, {k}, row_sum(i, k, Rational(i) + k), fact(i));
        if (i == 0) continue;
        std::vector<Rational> ms;
        for (long t = -2; t <= i + 1; ++t) ms.push_back(k + Rational(t));
        for (long m = -n_; m <= n_; ++m) ms.emplace_back(m);
        for (const auto& m : ms) {
          bool vanishes = row_sum(i, k, m).is_zero();
          Rational offset = m - k;
          bool in_set = offset.is_integer() && offset >= 0 && offset <= Rational(i - 1);
          check("e", {{"i", i}}, {k, m}, vanishes ? 1 : 0, in_set ? 1 : 0);
        }
      }
    }
    for (long i = 1; i <= n_; ++i) {
      std::vector<Rational> kf = ks_;
      for (long t = -i - 1; t <= 3; ++t) kf.emplace_back(t);
      for (const auto& k : kf) {
        bool vanishes = row_sum(i, k, 1).is_zero();
        bool in_set = k.is_integer() && k <= 1 && k >= Rational(2 - i);
        check("f", {{"i", i}}, {k}, vanishes ? 1 : 0, in_set ? 1 : 0);
      }
    }
  }

  // sum_r c(i, r, k) = c(i, 0, k - 1); clause a of sum_corollary on its own.
  void row_sum_shift() {
    describe(grid());
    for (const auto& k : ks_) {
      for (long i = 0; i <= n_; ++i) {
        check("a", {{"i", i}}, {k}, row_sum(i, k, 1), c(i, 0, k - 1));
      }
    }
  }

  void recursions() {
    describe(grid() + "; clause a uses i + n <= " + std::to_string(n_) +
             ", clauses b, c use i + 1 <= " + std::to_string(n_));
    for (const auto& k : ks_) {
      for (long i = 0; i <= n_; ++i) {
        for (long j = 0; j <= n_; ++j) {
          for (long n = 0; i + n <= n_; ++n) {
            Rational rhs = 0;
            for (long r = 0; r <= j; ++r) rhs += c(n, r, k) * c(i, j - r, k + Rational(n));
            check("a", {{"i", i}, {"j", j}, {"n", n}}, {k}, c(i + n, j, k), rhs);
          }
          if (i + 1 > n_) continue;
          check("b", {{"i", i}, {"j", j}}, {k}, c(i + 1, j, k),
                c(i, j - 1, k) - (Rational(i) + k) * c(i, j, k));
          check("c", {{"i", i}, {"j", j}}, {k}, c(i + 1, j, k),
                c(i, j - 1, k + 1) - k * c(i, j, k + 1));
        }
      }
    }
  }

  void r_stirling_match() {
    describe("0 <= j <= i <= " + std::to_string(n_) + "; 0 <= r <= " + std::to_string(n_) +
             "; left side from the native r-Stirling recurrence");
    for (long r = 0; r <= n_; ++r) {
      RStirlingTable table = RStirlingTable::build(r, n_);
      for (long i = 0; i <= n_; ++i) {
        for (long j = 0; j <= i; ++j) {
          Rational rhs = Rational(parity_sign(i - j)) * c(i - r, j - r, r);
          check("", {{"i", i}, {"j", j}, {"r", r}}, {r}, Rational(table.at(i, j)), rhs);
        }
      }
    }
  }

  void inversion() {
    describe(grid() + "; clause a is c*b = j! delta, clause a' is (b/r!)*c = delta");
    for (const auto& k : ks_) {
      for (long i = 0; i <= n_; ++i) {
        for (long j = 0; j <= i; ++j) {
          Rational left = 0;
          Rational right = 0;
          for (long r = j; r <= i; ++r) {
            left += c(i, r, k) * b(r, j, k);
            right += b(i, r, k) / fact(r) * c(r, j, k);
          }
          const bool diag = i == j;
          check("a", {{"i", i}, {"j", j}}, {k}, left, diag ? fact(j) : Rational(0));
          check("a'", {{"i", i}, {"j", j}}, {k}, right, diag ? Rational(1) : Rational(0));
        }
      }
    }
  }

  void cross_inverse() {
    std::vector<KPair> pairs;
    std::vector<KPair> skipped;
    for (const auto& p : pairs_) {
      bool ok = p.first.is_integer() && p.second.is_integer() && p.second >= p.first;
      if (ok) {
        pairs.push_back(p);
      } else if (lenient_) {
        skipped.push_back(p);
      } else if (!(p.first.is_integer() && p.second.is_integer())) {
        throw usage_error("cross_inverse requires integer k; got (" + p.first.str() + ", " +
                          p.second.str() + ")");
      }
      // Integer pairs with k2 < k1 lie outside the statement; they are dropped.
    }
    std::string text = "0 <= j <= i <= " + std::to_string(n_) +
                       "; integer (k1, k2) with k2 >= k1 in " + join_pairs(pairs);
    if (!skipped.empty()) text += "; skipped " + std::to_string(skipped.size()) + " pairs";
    describe(text);
    for (const auto& [k1, k2] : pairs) {
      for (long i = 0; i <= n_; ++i) {
        for (long j = 0; j <= i; ++j) {
          Rational lhs = 0;
          for (long r = j; r <= i; ++r) lhs += c(i, r, k1) * b(r, j, k2);
          check("b", {{"i", i}, {"j", j}}, {k1, k2}, lhs, fact(i) * binomial(k2 - k1, i - j));
        }
      }
    }
  }

  void convolution() {
    describe("0 <= i, j1, j2 <= " + std::to_string(n_) + "; (k1, k2) in " +
             join_pairs(pairs_));
    for (const auto& [k1, k2] : pairs_) {
      const Rational k12 = k1 + k2;
      for (long i = 0; i <= n_; ++i) {
        for (long j1 = 0; j1 <= n_; ++j1) {
          for (long j2 = 0; j2 <= n_; ++j2) {
            Rational lhs = 0;
            for (long r = 0; r <= i; ++r) {
              lhs += choose(i, r) * c(i - r, j1, k1) * c(r, j2, k2);
            }
            check("", {{"i", i}, {"j1", j1}, {"j2", j2}}, {k1, k2}, lhs,
                  choose(j1 + j2, j1) * c(i, j1 + j2, k12));
          }
        }
      }
    }
  }

  void convolution_corollary() {
    describe(grid() + "; clause b weights terms by i!/r!");
    for (const auto& k : ks_) {
      for (long i = 0; i <= n_; ++i) {
        for (long j = 0; j <= i; ++j) {
          Rational a = 0;
          Rational bsum = 0;
          for (long r = j; r <= i; ++r) {
            a += choose(i, r) * falling_factorial(k, i - r) * c(r, j, k);
            bsum += fact(i) / fact(r) * Rational(parity_sign(i - r)) * c(r, j, k);
          }
          check("a", {{"i", i}, {"j", j}}, {k}, a, s(i, j));
          check("b", {{"i", i}, {"j", j}}, {k}, bsum, c(i, j, k + 1));
        }
      }
    }
  }

  Rational shifted_sum(long i, long j, const Rational& k, const Rational& base) {
    Rational total = 0;
    Rational power = 1;  // base^{r-j}
    for (long r = j; r <= i; ++r) {
      total += choose(r, j) * power * c(i, r, k);
      power *= base;
    }
    return total;
  }

  void binomial_shift() {
    describe(pair_grid());
    for (const auto& [k1, k2] : pairs_) {
      for (long i = 0; i <= n_; ++i) {
        for (long j = 0; j <= i; ++j) {
          check("", {{"i", i}, {"j", j}}, {k1, k2}, shifted_sum(i, j, k1, k2),
                c(i, j, k1 - k2));
        }
      }
    }
  }

  void binomial_shift_corollary() {
    describe(grid());
    for (const auto& k : ks_) {
      for (long i = 0; i <= n_; ++i) {
        for (long j = 0; j <= i; ++j) {
          check("a", {{"i", i}, {"j", j}}, {k}, shifted_sum(i, j, k, k), s(i, j));
          check("b", {{"i", i}, {"j", j}}, {k}, shifted_sum(i, j, k, 1), c(i, j, k - 1));
          check("c", {{"i", i}, {"j", j}}, {k}, shifted_sum(i, j, k, -1), c(i, j, k + 1));
        }
      }
    }
  }

  void egf_match() {
    describe(grid() + "; series truncated at order " + std::to_string(n_));
    for (const auto& k : ks_) {
      for (long j = 0; j <= n_; ++j) {
        PowerSeries e = egf_series(j, k, n_);
        for (long i = 0; i <= n_; ++i) {
          check("", {{"i", i}, {"j", j}}, {k}, e[i], c(i, j, k) / fact(i));
        }
      }
    }
  }

  long n_;
  std::vector<Rational> ks_;
  std::vector<KPair> pairs_;
  bool lenient_;
  IdentityReport report_;
  std::map<Rational, std::vector<std::vector<Rational>>> c_cache_;
  std::map<Rational, std::vector<std::vector<Rational>>> b_cache_;
};

inline std::vector<KPair> all_ordered_pairs(const std::vector<Rational>& ks) {
  std::vector<KPair> pairs;
  for (const auto& a : ks) {
    for (const auto& b : ks) pairs.emplace_back(a, b);
  }
  return pairs;
}

}  // namespace detail

/// Checks one catalog identity over 0 <= j <= i <= n_max and every k (and
/// every ordered pair (k1, k2) for two-parameter identities).
///
/// harmonic_closed_form needs integer k >= 1 and cross_inverse needs integer
/// k; any other k is a usage_error.
inline IdentityReport verify_identity(std::string_view name, long n_max,
                                      const std::vector<Rational>& k_values) {
  if (!is_known_identity(name)) {
    throw usage_error("unknown identity '" + std::string(name) + "'");
  }
  detail::IdentityEngine engine(n_max, k_values, detail::all_ordered_pairs(k_values),
                                /*lenient=*/false);
  return engine.run(name);
}

/// Same, with the two-parameter identities restricted to explicit pairs.
/// The single-parameter identities use the distinct members of the pairs.
inline IdentityReport verify_identity(std::string_view name, long n_max,
                                      const std::vector<KPair>& k_pairs) {
  if (!is_known_identity(name)) {
    throw usage_error("unknown identity '" + std::string(name) + "'");
  }
  std::vector<Rational> ks;
  for (const auto& [a, b] : k_pairs) {
    for (const auto& k : {a, b}) {
      if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
    }
  }
  detail::IdentityEngine engine(n_max, std::move(ks), k_pairs, /*lenient=*/false);
  return engine.run(name);
}

/// Every catalog identity, in catalog order. k values an identity cannot
/// take are skipped for that identity and listed in its parameter_ranges.
inline std::vector<IdentityReport> verify_all(long n_max,
                                              const std::vector<Rational>& k_values) {
  detail::IdentityEngine engine(n_max, k_values, detail::all_ordered_pairs(k_values),
                                /*lenient=*/true);
  std::vector<IdentityReport> reports;
  for (auto name : identity_catalog) reports.push_back(engine.run(name));
  return reports;
}

}  // namespace msn
