#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "qdeform/qfun.hpp"

using namespace qdeform;

TEST(QLog, SpotValues) {
  EXPECT_NEAR(ln_q(1.0, M_E).value(), 1.0, 1e-15);
  EXPECT_NEAR(ln_q(2.0, 2.0).value(), 0.5, 1e-15);
  EXPECT_NEAR(ln_q(0.5, 0.0).value(), -2.0, 1e-15);
}

TEST(QLog, NegativeAndUndefinedInputs) {
  EXPECT_TRUE(ln_q(0.5, -1.0).is_undefined());
  EXPECT_TRUE(ln_q(2.0, ExtReal::undefined(Reason::invalid_input)).is_undefined());
}

TEST(QLog, ZeroArgumentAboveOneIsMinusInfinity) {
  EXPECT_EQ(ln_q(2.0, 0.0).kind(), ExtReal::Kind::neg_inf);
  EXPECT_EQ(ln_q(1.0, 0.0).kind(), ExtReal::Kind::neg_inf);
}

TEST(QExp, SpotValues) {
  EXPECT_EQ(exp_q(1.0, 0.0).value(), 1.0);
  EXPECT_EQ(exp_q(0.5, -3.0).value(), 0.0);
  EXPECT_NEAR(exp_q(0.5, 6.0).value(), 16.0, 1e-13);
}

TEST(QExp, CutoffBoundaries) {
  // q < 1: zero at and below -1/(1-q); q > 1: divergent at and above 1/(q-1)
  EXPECT_EQ(exp_q(0.5, -2.0).value(), 0.0);
  EXPECT_GT(exp_q(0.5, -1.999).value(), 0.0);
  EXPECT_EQ(exp_q(2.0, 1.0).kind(), ExtReal::Kind::pos_inf);
  EXPECT_TRUE(exp_q(2.0, 0.999).is_finite());
}

TEST(QExp, InfiniteArguments) {
  EXPECT_EQ(exp_q(0.5, ExtReal::neg_inf()).value(), 0.0);
  EXPECT_EQ(exp_q(0.5, ExtReal::pos_inf()).kind(), ExtReal::Kind::pos_inf);
  EXPECT_EQ(exp_q(2.0, ExtReal::neg_inf()).value(), 0.0);
}

TEST(QFunctions, MatchOracleOnGrid) {
  for (double q : {-2.0, -1.0, 0.0, 0.5, 0.9, 1.0, 1.5, 2.0, 3.0}) {
    for (double x = 0.05; x < 8.0; x += 0.37) {
      EXPECT_LT(oracle::rel(ln_q(q, x).value(), oracle::ln_q(q, x)), 1e-14) << q << " " << x;
      const auto ref = oracle::exp_q(q, x - 4.0);
      const ExtReal got = exp_q(q, x - 4.0);
      if (std::isinf(ref)) {
        EXPECT_EQ(got.kind(), ExtReal::Kind::pos_inf);
      } else {
        EXPECT_LT(oracle::rel(got.value(), ref), 1e-13) << q << " " << x;
      }
    }
  }
}

TEST(QFunctions, NearOneIsContinuous) {
  for (double eps : {1e-6, 1e-9, 1e-11, 1e-13}) {
    EXPECT_NEAR(ln_q(1.0 + eps, 3.0).value(), std::log(3.0), 1e-5);
    EXPECT_NEAR(exp_q(1.0 - eps, 1.5).value(), std::exp(1.5), 1e-4);
  }
}

TEST(QFunctions, RoundTrip) {
  for (double q : {-2.0, -0.5, 0.3, 1.7, 3.0}) {
    for (double x : {0.1, 0.7, 1.0, 2.5, 6.0}) {
      EXPECT_NEAR(exp_q(q, ln_q(q, x)).value(), x, 1e-12 * x) << q;
    }
  }
}

TEST(Nonadditivity, SpotValues) {
  EXPECT_NEAR(nonadditivity_residual(1.0, 2.0, 3.0).value(), 0.0, 1e-15);
  EXPECT_NEAR(nonadditivity_residual(2.0, 2.0, 2.0).value(), 0.0, 1e-15);
  EXPECT_NEAR(nonadditivity_residual(0.5, 4.0, 9.0).value(), 0.0, 1e-15);
}

TEST(Nonadditivity, OracleSides) {
  // ln_q(xy) against the oracle on the right-hand side
  const double q = -1.3, x = 1.7, y = 0.4;
  const auto a = oracle::ln_q(q, x), b = oracle::ln_q(q, y);
  EXPECT_LT(oracle::rel(ln_q(q, x * y).value(), a + b + (1 - q) * a * b), 1e-14);
}
