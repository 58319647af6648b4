#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "msn/numbers.hpp"
#include "test_support.hpp"

namespace msn {
namespace {

using testing::standard_ks;

// Oracle for integer k: expand prod_{t<i} (x - k - t) in plain 64-bit
// integers. Independent of the Stirling tables and of Rational.
std::vector<std::int64_t> shifted_falling_coeffs(int i, std::int64_t k) {
  std::vector<std::int64_t> poly{1};
  for (int t = 0; t < i; ++t) {
    std::vector<std::int64_t> next(poly.size() + 1, 0);
    for (std::size_t p = 0; p < poly.size(); ++p) {
      next[p + 1] += poly[p];
      next[p] -= (k + t) * poly[p];
    }
    poly = next;
  }
  return poly;
}

// Oracle for rational k: coefficient of x^j in prod_{t<i} (x - k - t) is the
// elementary symmetric sum of the roots' negatives over (i - j)-subsets.
Rational subset_coefficient(int i, int j, const Rational& k) {
  if (j > i) return 0;
  Rational total = 0;
  for (unsigned mask = 0; mask < (1u << i); ++mask) {
    if (__builtin_popcount(mask) != i - j) continue;
    Rational term = 1;
    for (int t = 0; t < i; ++t) {
      if (mask & (1u << t)) term *= -(k + Rational(t));
    }
    total += term;
  }
  return total;
}

TEST(Msn1Def, SpotValues) {
  for (const auto& k : standard_ks()) {
    for (long i = 0; i <= 12; ++i) EXPECT_EQ(msn1_def(i, i, k), Rational(1));
  }
  EXPECT_EQ(msn1_def(3, 0, 1), Rational(-6));
  EXPECT_EQ(msn1_def(3, 1, 1), Rational(11));
  EXPECT_EQ(msn1_def(2, 1, 1), Rational(-3));
  EXPECT_EQ(msn1_def(3, 0, 2), Rational(-24));
  EXPECT_EQ(msn1_def(-1, 0, 1), Rational(0));
  EXPECT_EQ(msn1_def(2, -1, 1), Rational(0));
  EXPECT_EQ(msn1_def(2, 3, 1), Rational(0));
}

TEST(Msn1Def, MatchesIntegerExpansionOracle) {
  for (std::int64_t k = -3; k <= 4; ++k) {
    for (int i = 0; i <= 10; ++i) {
      auto coeffs = shifted_falling_coeffs(i, k);
      for (int j = 0; j <= i; ++j) {
        EXPECT_EQ(msn1_def(i, j, Rational(k)), Rational(coeffs[j])) << i << "," << j << "," << k;
      }
    }
  }
}

TEST(Msn1Def, MatchesSubsetOracleForRationalK) {
  for (const auto& k : {Rational(1, 2), Rational(-3, 7), Rational(5, 3)}) {
    for (int i = 0; i <= 9; ++i) {
      for (int j = 0; j <= i; ++j) EXPECT_EQ(msn1_def(i, j, k), subset_coefficient(i, j, k));
    }
  }
}

TEST(Msn1Table, Examples) {
  MsnTable t = msn1_table(2, 1);
  EXPECT_EQ(t.row(2), (std::vector<Rational>{2, -3, 1}));
  EXPECT_EQ(msn1_table(0, Rational(5, 2)).rows(), (std::vector<std::vector<Rational>>{{1}}));
  MsnTable zero = msn1_table(10, 0);
  for (long i = 0; i <= 10; ++i) {
    for (long j = 0; j <= i; ++j) EXPECT_EQ(zero.at(i, j), Rational(stirling_first(i, j)));
  }
  EXPECT_EQ(t.at(1, 2), Rational(0));
  EXPECT_THROW(t.at(3, 0), usage_error);
  EXPECT_THROW(msn1_table(-1, 0), usage_error);
}

TEST(Msn1, DefinitionRecursionAndOgfAgree) {
  for (const auto& k : standard_ks()) {
    MsnTable table = msn1_table(12, k);
    for (long i = 0; i <= 12; ++i) {
      Polynomial g = ogf_poly(i, k);
      EXPECT_EQ(g.degree(), i);
      for (long j = 0; j <= i; ++j) {
        const Rational def = msn1_def(i, j, k);
        EXPECT_EQ(table.at(i, j), def) << i << "," << j << "," << k;
        EXPECT_EQ(g.coeff(j), def) << i << "," << j << "," << k;
      }
    }
  }
}

TEST(Msn1, AdjacentKRecursion) {
  // c(i+1, j, k) = c(i, j-1, k+1) - k c(i, j, k+1)
  for (const auto& k : standard_ks()) {
    MsnTable here = msn1_table(12, k);
    MsnTable next = msn1_table(12, k + 1);
    for (long i = 0; i < 12; ++i) {
      for (long j = 0; j <= i + 1; ++j) {
        EXPECT_EQ(here.at(i + 1, j), next.at(i, j - 1) - k * next.at(i, j));
      }
    }
  }
}

TEST(Msn2, SpotValues) {
  EXPECT_EQ(msn2(0, 0, Rational(7, 3)), Rational(1));
  EXPECT_EQ(msn2(0, 0, 0), Rational(1));
  EXPECT_EQ(msn2(2, 1, 0), Rational(1));
  EXPECT_EQ(msn2(1, 1, 1), Rational(1));
  EXPECT_EQ(msn2(-1, 0, 1), Rational(0));
  EXPECT_EQ(msn2(2, 3, Rational(1, 2)), Rational(0));
}

TEST(Msn2, AtZeroIsScaledStirlingSecond) {
  MsnTable b = msn2_table(10, 0);
  for (long i = 0; i <= 10; ++i) {
    for (long j = 0; j <= i; ++j) {
      EXPECT_EQ(b.at(i, j), Rational(factorial(j) * stirling_second(i, j)));
    }
  }
}

TEST(OgfPoly, Examples) {
  EXPECT_EQ(ogf_poly(0, Rational(3, 4)), Polynomial::constant(1));
  EXPECT_EQ(ogf_poly(2, 1), Polynomial({2, -3, 1}));
  for (long i = 0; i <= 8; ++i) {
    std::vector<Rational> s;
    for (long r = 0; r <= i; ++r) s.emplace_back(stirling_first(i, r));
    EXPECT_EQ(ogf_poly(i, 0), Polynomial(s));
  }
  EXPECT_THROW(ogf_poly(-1, 0), usage_error);
}

TEST(EgfSeries, Examples) {
  EXPECT_EQ(egf_series(0, 0, 4), PowerSeries::one(4));
  EXPECT_EQ(egf_series(1, 0, 3).coeffs(),
            (std::vector<Rational>{0, 1, Rational(-1, 2), Rational(1, 3)}));
  EXPECT_EQ(egf_series(1, 1, 2)[2], Rational(-3, 2));
  EXPECT_THROW(egf_series(3, 0, 2), usage_error);
}

TEST(EgfSeries, CoefficientsMatchDefinition) {
  const long order = 12;
  for (const auto& k : standard_ks()) {
    for (long j = 0; j <= order; ++j) {
      PowerSeries e = egf_series(j, k, order);
      for (long i = 0; i <= order; ++i) {
        EXPECT_EQ(e[i] * Rational(factorial(i)), msn1_def(i, j, k)) << i << "," << j << "," << k;
      }
    }
  }
}

}  // namespace
}  // namespace msn
