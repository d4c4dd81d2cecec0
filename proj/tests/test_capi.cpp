#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "qdeform/qdeform.h"

TEST(CApi, Names) {
  qd_class c;
  ASSERT_EQ(qd_class_from_name("oel", &c), QD_OK);
  EXPECT_EQ(c, QD_OEL);
  EXPECT_STREQ(qd_class_name(QD_ILE), "ile");
  EXPECT_EQ(qd_class_from_name("xyz", &c), QD_ERR_UNKNOWN_NAME);
  EXPECT_NE(std::strlen(qd_last_error()), 0u);
  qd_op op;
  ASSERT_EQ(qd_op_from_name("div", &op), QD_OK);
  EXPECT_EQ(op, QD_DIV);
  EXPECT_EQ(qd_class_from_name(nullptr, &c), QD_ERR_NULL);
}

TEST(CApi, Values) {
  qd_value v;
  ASSERT_EQ(qd_ln_q(2.0, 2.0, &v), QD_OK);
  EXPECT_EQ(v.kind, QD_FINITE);
  EXPECT_NEAR(v.value, 0.5, 1e-15);
  ASSERT_EQ(qd_exp_q(2.0, 1.0, &v), QD_OK);
  EXPECT_EQ(v.kind, QD_POS_INF);
  ASSERT_EQ(qd_deform(QD_IEL, 0.5, 0.0, &v), QD_OK);
  EXPECT_EQ(v.kind, QD_UNDEFINED);
  EXPECT_TRUE(std::isnan(v.value));
  EXPECT_STREQ(qd_reason_name(v.reason), "zero_argument");
  ASSERT_EQ(qd_op_closed(QD_OEL, QD_MUL, 0.5, 4.0, 9.0, &v), QD_OK);
  EXPECT_NEAR(v.value, 16.0, 1e-12);
  ASSERT_EQ(qd_tpow(QD_OEL, 0.5, 4.0, 3.0, &v), QD_OK);
  EXPECT_NEAR(v.value, 16.0, 1e-12);
  ASSERT_EQ(qd_dot(QD_OLE, 0.0, 3.0, 1.0, &v), QD_OK);
  EXPECT_NEAR(v.value, 7.0, 1e-12);
  int cut = -1;
  ASSERT_EQ(qd_in_cutoff(QD_OEL, QD_MUL, -1.0, 0.3, 0.3, &cut), QD_OK);
  EXPECT_EQ(cut, 1);
}

TEST(CApi, Errors) {
  qd_value v;
  EXPECT_EQ(qd_ln_q(NAN, 1.0, &v), QD_ERR_INVALID);
  EXPECT_EQ(qd_ln_q(1.0, 1.0, nullptr), QD_ERR_NULL);
  EXPECT_EQ(qd_deform(static_cast<qd_class>(9), 1.0, 1.0, &v), QD_ERR_INVALID);
  qd_element e;
  ASSERT_EQ(qd_neutral_mul(QD_ILE, 2.5, &e), QD_OK);
  EXPECT_EQ(e.kind, QD_NONE);
}

namespace {

double square(double x, void*) { return x * x; }
double twice(double x, void*) { return 2.0 * x; }

}  // namespace

TEST(CApi, Calculus) {
  qd_function* f = nullptr;
  ASSERT_EQ(qd_function_create(square, twice, nullptr, -INFINITY, INFINITY, &f), QD_OK);
  qd_value v;
  double err = -1;
  ASSERT_EQ(qd_d_linear(QD_ILE, 1.0, f, 3.0, &v, &err), QD_OK);
  EXPECT_NEAR(v.value, 6.0, 1e-14);
  EXPECT_EQ(err, 0.0);
  ASSERT_EQ(qd_int_linear(QD_OLE, 1.0, f, 0.0, 1.0, &v), QD_OK);
  EXPECT_NEAR(v.value, 1.0 / 3.0, 1e-12);
  qd_function_destroy(f);
  qd_function* g = nullptr;
  ASSERT_EQ(qd_function_create(square, nullptr, nullptr, -INFINITY, INFINITY, &g), QD_OK);
  ASSERT_EQ(qd_d_nonlinear(QD_ILE, 1.0, g, 2.0, &v, nullptr), QD_OK);
  EXPECT_NEAR(v.value, 4.0, 1e-7);
  qd_function_destroy(g);
  EXPECT_EQ(qd_function_create(nullptr, nullptr, nullptr, 0, 1, &g), QD_ERR_NULL);
  ASSERT_EQ(qd_qlog_integral(0.5, 4.0, &v), QD_OK);
  EXPECT_NEAR(v.value, 2.0, 1e-12);
}

TEST(CApi, Entropy) {
  const double p[] = {0.5, 0.5};
  qd_distribution* d = nullptr;
  ASSERT_EQ(qd_distribution_create(p, 2, 1.0, &d), QD_OK);
  double s = 0;
  ASSERT_EQ(qd_s_tsallis(d, 2.0, &s), QD_OK);
  EXPECT_NEAR(s, 0.5, 1e-15);
  qd_value v;
  ASSERT_EQ(qd_s_delta(QD_OEL, 2.0, d, &v), QD_OK);
  EXPECT_NEAR(v.value, 0.5, 1e-15);
  qd_distribution_destroy(d);
  const double bad[] = {0.5, 0.6};
  EXPECT_EQ(qd_distribution_create(bad, 2, 1.0, &d), QD_ERR_INVALID);
}

TEST(CApi, VerifyAndDatasets) {
  qd_verify_options o;
  qd_verify_options_default(&o);
  EXPECT_EQ(o.seed, 42u);
  o.count = 500;
  o.calc_count = 50;
  qd_report* r = nullptr;
  ASSERT_EQ(qd_verify("qfun", &o, &r), QD_OK);
  EXPECT_EQ(qd_report_passed(r), 1);
  EXPECT_NE(std::string(qd_report_text(r)).find("\"suite\": \"qfun\""), std::string::npos);
  qd_report_destroy(r);
  EXPECT_EQ(qd_verify("nope", &o, &r), QD_ERR_UNKNOWN_NAME);

  const qd_class cls[] = {QD_OEL};
  const double qs[] = {2.0};
  ASSERT_EQ(qd_dataset_two_state(cls, 1, qs, 1, qd_grid{0.0, 1.0, 3}, QD_CSV, &r), QD_OK);
  EXPECT_STREQ(qd_report_text(r), "class,q,p,S\noel,2,0,0\noel,2,0.5,0.5\noel,2,1,0\n");
  qd_report_destroy(r);
  EXPECT_EQ(qd_dataset_numbers(cls, 1, qs, 1, qd_grid{1.0, 0.0, 3}, QD_CSV, &r), QD_ERR_INVALID);
}
