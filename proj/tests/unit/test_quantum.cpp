#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qskein/errors.hpp"
#include "qskein/quantum.hpp"

using qskein::LaurentPoly;
using qskein::RationalFn;
using namespace qskein;

namespace {

LaurentPoly P(int min_exp, std::initializer_list<long> c) { return LaurentPoly::from_ints(min_exp, c); }

// q-polynomial coefficients as an A-polynomial with exponents 4j.
LaurentPoly in_q(std::initializer_list<long> c) {
  std::vector<Integer> a;
  for (long x : c) {
    if (!a.empty()) a.insert(a.end(), 3, Integer(0));
    a.emplace_back(x);
  }
  return LaurentPoly(0, a);
}

}  // namespace

TEST(Quantum, QintValues) {
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(1), LaurentPoly::constant(1));
  EXPECT_EQ(qint(2), P(-2, {1, 0, 0, 0, 1}));
  EXPECT_EQ(qint(-3), -qint(3));
  EXPECT_EQ(qint(3), P(-4, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
}

TEST(Quantum, QintPalindromicAndMatchesDefinition) {
  for (int n = -12; n <= 12; ++n) {
    EXPECT_EQ(lp_substitute_invert(qint(n)), qint(n)) << n;
    for (const auto& a : oracle::sample_points()) EXPECT_EQ(oracle::eval(qint(n), a), (oracle::AtPoint{a}.qint(n)));
  }
}

TEST(Quantum, DeltaValues) {
  EXPECT_EQ(delta(0), LaurentPoly::constant(1));
  EXPECT_EQ(delta(1), P(-2, {-1, 0, 0, 0, -1}));
  EXPECT_TRUE(delta(-1).is_zero());
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(delta(-n - 2), -delta(n)) << n;
}

TEST(Quantum, QpochFinite) {
  EXPECT_EQ(qpoch_finite(0, 7), TruncatedSeries::one(7));
  EXPECT_EQ(qpoch_finite(2, 10), TruncatedSeries::from_terms(0, {1, -1, -1, 1}, 10));
  EXPECT_EQ(qpoch_finite(3, 4), TruncatedSeries::from_terms(0, {1, -1, -1, 0}, 4));
  EXPECT_THROW(qpoch_finite(-1, 4), InvalidParams);
  for (int n = 0; n <= 8; ++n) {
    const auto expect = oracle::qpoch_product(n, 30);
    const auto got = qpoch_finite(n, 30);
    for (int e = 0; e < 30; ++e) EXPECT_EQ(got.coeff(e), expect[static_cast<std::size_t>(e)]);
    EXPECT_EQ(lp_to_series(qpoch_poly(n), 30), got);
  }
}

TEST(Quantum, GaussBinomValues) {
  EXPECT_EQ(gauss_binom(7, 0), LaurentPoly::constant(1));
  EXPECT_EQ(gauss_binom(2, 1), in_q({1, 1}));
  EXPECT_EQ(gauss_binom(4, 2), in_q({1, 1, 2, 1, 1}));
  EXPECT_TRUE(gauss_binom(3, 4).is_zero());
  EXPECT_TRUE(gauss_binom(3, -1).is_zero());
}

TEST(Quantum, GaussBinomMatchesPochhammerQuotient) {
  for (int l = 0; l <= 12; ++l) {
    for (int i = 0; i <= l; ++i) {
      const auto q = oracle::gauss_q(l, i);
      const LaurentPoly g = gauss_binom(l, i);
      for (std::size_t j = 0; j < q.size(); ++j) EXPECT_EQ(g.coeff(4 * static_cast<int>(j)), q[j]) << l << "," << i;
      EXPECT_EQ(g.max_exp(), 4 * i * (l - i));
      EXPECT_EQ(g, gauss_binom(l, l - i));
    }
  }
}

TEST(Quantum, DeltaProductIdentity) {
  EXPECT_TRUE(delta_product_identity(0, 0, 1));
  EXPECT_TRUE(delta_product_identity(1, 1, 1));
  EXPECT_TRUE(delta_product_identity(3, 2, 4));
}

TEST(Quantum, AlphaBeta) {
  EXPECT_EQ(alpha(0, 0, 1), RationalFn(delta(1)));
  EXPECT_TRUE(beta(0, 3, 2).is_zero());
  EXPECT_EQ(beta(1, 1, 1), RationalFn(LaurentPoly::constant(1), delta(1) * delta(1)));
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int k = 1; k <= 4; ++k) {
        EXPECT_EQ(alpha(m, n, k), alpha_product_form(m, n, k));
        EXPECT_EQ(alpha(m, n, k), alpha(n, m, k));
        for (const auto& a : oracle::sample_points()) {
          const oracle::AtPoint at{a};
          EXPECT_EQ(oracle::eval(alpha(m, n, k), a), at.alpha(m, n, k));
          EXPECT_EQ(oracle::eval(beta(m, n, k), a), at.beta(m, n, k));
        }
      }
}

TEST(Quantum, AlphaZeroDenominator) {
  // k = 0 with m = 0 puts Delta_{-1} in the denominator.
  EXPECT_THROW(alpha(0, 2, 0), ZeroDenominator);
  EXPECT_THROW(beta(2, 0, 0), ZeroDenominator);
}
