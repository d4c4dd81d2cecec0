#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "qdeform/calculus.hpp"
#include "qdeform/qfun.hpp"
#include "qdeform/quadrature.hpp"

using namespace qdeform;

namespace {

RealFn qexp_fn(double q) {
  const Interval dom = q < 1.0 ? Interval{-1.0 / (1.0 - q), 1e9} : Interval{-1e9, 1.0 / (q - 1.0)};
  return RealFn([q](double x) { return exp_q(q, x).value(); }, dom);
}

}  // namespace

TEST(DeformingFunction, SpotValues) {
  EXPECT_NEAR(h(Deform::ole, 0.0, 1.0).value(), 0.5, 1e-15);
  EXPECT_NEAR(h(Deform::ile, 1.0, 2.0).value(), 1.0, 1e-15);
  EXPECT_NEAR(h(Deform::ole, 1.0, 2.0).value(), 1.0, 1e-15);
  EXPECT_NEAR(h(Deform::iel, 1.0, 3.0).value(), 1.0, 1e-15);
  EXPECT_NEAR(h(Deform::oel, 0.5, 4.0).value(), 0.5 * std::exp(2.0), 1e-13);
  EXPECT_NEAR(h(Deform::oel, 0.5, 4.0).value(), 3.694528, 1e-6);
}

TEST(DeformingFunction, IsSlopeOfComplement) {
  for (Deform d : all_deforms) {
    for (double q : {-0.5, 0.5, 1.5}) {
      for (double x : {0.4, 0.9, 1.3}) {
        const Deform c = complement(d);
        const auto num = [&](double t) -> oracle::R {
          switch (c) {
            case Deform::ile: return oracle::ile(q, t);
            case Deform::ole: return oracle::ole(q, t);
            case Deform::iel: return oracle::iel(q, t);
            case Deform::oel: return oracle::oel(q, t);
          }
          return 0;
        };
        const oracle::R e = 1e-6L;
        const oracle::R slope = (num(x + e) - num(x - e)) / (2 * e);
        const ExtReal got = h(d, q, x);
        if (!got.is_finite() || !std::isfinite(static_cast<double>(slope))) continue;
        EXPECT_LT(oracle::rel(got.value(), slope), 1e-6) << name(d) << " q=" << q << " x=" << x;
      }
    }
  }
}

TEST(LinearDerivative, SpotValues) {
  const RealFn sq([](double x) { return x * x; });
  EXPECT_NEAR(d_linear(Deform::ile, 1.0, sq, 3.0).value.value(), 6.0, 1e-7);
  const RealFn id([](double x) { return x; }, [](double) { return 1.0; });
  EXPECT_NEAR(d_linear(Deform::ole, 0.0, id, 1.0).value.value(), 2.0, 1e-14);
}

TEST(LinearDerivative, QExpIsEigenfunction) {
  for (double q : {-1.0, 0.3, 0.5, 1.5, 2.0}) {
    const RealFn f = qexp_fn(q);
    for (double x : {-0.3, 0.2, 0.4}) {
      const Derivative dv = d_linear(Deform::ole, q, f, x);
      ASSERT_TRUE(dv.value.is_finite());
      EXPECT_NEAR(dv.value.value(), exp_q(q, x).value(), 1e-6 * exp_q(q, x).value()) << q << " " << x;
    }
  }
}

TEST(NonlinearDerivative, SpotValues) {
  for (double q : {-1.0, 0.5, 2.0}) {
    const RealFn lnq([q](double x) { return ln_q(q, x).value(); }, Interval{0.0, 1e9});
    EXPECT_NEAR(d_nonlinear(Deform::ole, q, lnq, 2.5).value.value(), 1.0 / 2.5, 1e-7) << q;
  }
  const RealFn cube([](double x) { return x * x * x; });
  for (Deform d : all_deforms) EXPECT_NEAR(d_nonlinear(d, 1.0, cube, 2.0).value.value(), 12.0, 1e-6);
  const RealFn id([](double x) { return x; }, [](double) { return 1.0; });
  EXPECT_NEAR(d_nonlinear(Deform::ile, 0.0, id, 1.0).value.value(), M_E, 1e-14);
}

TEST(SecondNonlinearDerivative, SpotValues) {
  const RealFn cube([](double x) { return x * x * x; });
  EXPECT_NEAR(d_nonlinear2(Deform::ile, 1.0, cube, 2.0).value.value(), 12.0, 1e-5);
  const RealFn id([](double x) { return x; }, [](double) { return 1.0; });
  EXPECT_NEAR(d_nonlinear2(Deform::ile, 0.0, id, 0.0).value.value(), 1.0, 1e-6);
  const double q = 0.5;
  const RealFn f = qexp_fn(q);
  // h(f) d/dx[h(f) f'] with h(y) = 1/(1 + (1-q)y), f' = f^q
  const double c = 1.0 - q, x = 0.3;
  const double e = exp_q(q, x).value(), fp = std::pow(e, q);
  const double gp = fp * std::pow(e, q - 1.0) * (q * (1.0 + c * e) - c * e) / ((1.0 + c * e) * (1.0 + c * e));
  EXPECT_NEAR(d_nonlinear2(Deform::ole, q, f, x).value.value(), gp / (1.0 + c * e), 1e-6);
}

TEST(NobreDerivatives, SpotValues) {
  for (double q : {0.5, 1.5}) {
    const RealFn f = qexp_fn(q);
    EXPECT_NEAR(d_nobre_nonlinear(q, f, 0.25).value.value(), exp_q(q, 0.25).value(), 1e-6);
    const RealFn lnq([q](double x) { return ln_q(q, x).value(); }, Interval{0.0, 1e9});
    EXPECT_NEAR(d_nobre_linear(q, lnq, 2.0).value.value(), 0.5, 1e-7);
  }
  const RealFn sq([](double x) { return x * x; });
  EXPECT_NEAR(d_nobre_linear(1.0, sq, 3.0).value.value(), 6.0, 1e-7);
  EXPECT_NEAR(d_nobre_nonlinear(1.0, sq, 3.0).value.value(), 6.0, 1e-7);
}

TEST(Integrals, SpotValues) {
  const RealFn one([](double) { return 1.0; });
  for (Deform d : all_deforms) EXPECT_NEAR(int_linear(d, 1.0, one, 0.0, 1.0).value(), 1.0, 1e-12);
  for (Deform d : all_deforms) EXPECT_NEAR(int_nonlinear(d, 1.0, one, 0.0, 1.0).value(), 1.0, 1e-12);
  EXPECT_NEAR(int_linear(Deform::ile, 0.0, one, 0.0, 1.0).value(), M_E - 1.0, 1e-12);
  const RealFn id([](double x) { return x; });
  EXPECT_NEAR(int_nonlinear(Deform::ile, 0.0, id, 0.0, 1.0).value(), 1.0 - 2.0 / M_E, 1e-12);
}

TEST(Integrals, LinearMatchesSimpsonOracle) {
  const RealFn f([](double x) { return std::cos(x); });
  for (Deform d : all_deforms) {
    for (double q : {0.5, 1.5}) {
      const auto ref = oracle::simpson([&](oracle::R t) { return std::cos(t) * h(d, q, static_cast<double>(t)).value(); },
                                       0.5L, 1.5L);
      EXPECT_LT(oracle::rel(int_linear(d, q, f, 0.5, 1.5).value(), ref), 1e-10) << name(d) << " q=" << q;
    }
  }
}

TEST(QLogIntegral, SpotValues) {
  EXPECT_NEAR(qlog_integral(1.0, M_E).value(), 1.0, 1e-12);
  EXPECT_NEAR(qlog_integral(2.0, 2.0).value(), 0.5, 1e-12);
  EXPECT_NEAR(qlog_integral(0.5, 4.0).value(), 2.0, 1e-12);
}

TEST(QLogIntegral, Grid) {
  for (double q : {-1.0, 0.5, 2.0, 3.0})
    for (double x : {0.5, 2.0, 4.0, 10.0})
      EXPECT_NEAR(qlog_integral(q, x).value(), static_cast<double>(oracle::ln_q(q, x)), 1e-8) << q << " " << x;
}

TEST(FundamentalTheorem, LinearHolds) {
  const RealFn f([](double x) { return std::sin(x) + 2.0; });
  for (Deform d : all_deforms)
    for (double q : {0.5, 1.5}) EXPECT_LT(ft_linear_residual(d, q, f, 0.5, 1.2).value(), 1e-7) << name(d);
}

TEST(FundamentalTheorem, NonlinearCounterexample) {
  const double q = 0.5;
  const RealFn f = qexp_fn(q);
  double worst = 0.0;
  for (double x : {0.5, 1.0, 1.5, 2.0}) {
    const ExtReal r = ft_nonlinear_residual(Deform::ole, q, f, 0.0, x);
    if (r.is_finite()) worst = std::max(worst, r.value());
  }
  EXPECT_GT(worst, 1e-3);
}

TEST(PowerRule, SpotValues) {
  EXPECT_LE(power_rule_residual(Side::o, true, 0.5, 2, 1.0).value(), 1e-6);
  EXPECT_LE(power_rule_residual(Side::i, false, 2.0, 3, 0.5).value(), 1e-6);
  EXPECT_LE(power_rule_residual(Side::i, true, 1.0, 2, 3.0).value(), 1e-12);
  EXPECT_LE(power_rule_residual(Side::o, false, 1.0, 2, 3.0).value(), 1e-12);
}

TEST(ProductRule, SpotValues) {
  const RealFn x([](double t) { return t; });
  const RealFn x2([](double t) { return t * t; });
  EXPECT_LE(product_rule_residual(Deform::ole, true, 0.5, x, x2, 1.0).value(), 1e-6);
  const RealFn ex([](double t) { return std::exp(t); });
  EXPECT_LE(product_rule_residual(Deform::ile, false, 0.0, ex, ex, 0.3).value(), 1e-6);
  for (Deform d : all_deforms) {
    EXPECT_LE(product_rule_residual(d, true, 1.0, x, x2, 1.3).value(), 1e-8);
    EXPECT_LE(product_rule_residual(d, false, 1.0, x, x2, 1.3).value(), 1e-8);
  }
}

TEST(Equivalence, DifferentialMatchesDeformingFunction) {
  for (Deform d : all_deforms)
    for (double q : {-0.5, 0.5, 1.5})
      for (double x : {0.4, 1.1}) {
        const ExtReal r = equivalence_residual(d, q, x);
        if (r.is_finite()) EXPECT_LT(r.value(), 1e-6) << name(d);
      }
}

TEST(CentralDifference, PolynomialAndEdges) {
  const Derivative dv = central_difference([](double x) { return ExtReal(x * x * x); }, 2.0);
  EXPECT_NEAR(dv.value.value(), 12.0, 1e-8);
  const Derivative edge = central_difference([](double x) { return ExtReal(std::sqrt(x)); }, 0.0, Interval{0.0, 1.0});
  EXPECT_FALSE(edge.value.is_finite() && edge.error < 1e-3);
  const Derivative one_sided = central_difference([](double x) { return ExtReal(x * x); }, 1.0, Interval{0.0, 1.0});
  EXPECT_NEAR(one_sided.value.value(), 2.0, 1e-6);
}

TEST(Quadrature, GaussKronrod) {
  const Quadrature r = integrate([](double x) { return std::exp(-x * x); }, -3.0, 3.0);
  ASSERT_TRUE(r.ok);
  EXPECT_NEAR(r.value, std::sqrt(M_PI) * std::erf(3.0), 1e-12);
  EXPECT_FALSE(integrate([](double x) { return std::exp(-x); }, 0.0, INFINITY).ok);
  const Quadrature bad = integrate([](double x) { return 1.0 / x; }, 0.0, 1.0);
  EXPECT_FALSE(bad.ok);
}
