#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qdeform/datasets.hpp"

using namespace qdeform;

TEST(GridType, Points) {
  const Grid g{-1.0, 1.0, 5};
  const auto p = g.points();
  ASSERT_EQ(p.size(), 5u);
  EXPECT_EQ(p.front(), -1.0);
  EXPECT_EQ(p[2], 0.0);
  EXPECT_EQ(p.back(), 1.0);
  EXPECT_THROW((Grid{0.0, 1.0, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((Grid{1.0, 0.0, 3}.validate()), std::invalid_argument);
  EXPECT_THROW((Grid{0.0, INFINITY, 3}.validate()), std::invalid_argument);
}

TEST(TableType, CsvAndJson) {
  Table t{{"a", "b"}, {}};
  t.rows.push_back({"x", 0.1});
  t.rows.push_back({"y", ExtReal::pos_inf()});
  t.rows.push_back({"z", ExtReal::undefined(Reason::cutoff)});
  EXPECT_EQ(t.csv(), "a,b\nx,0.10000000000000001\ny,inf\nz,undefined\n");
  const auto j = nlohmann::json::parse(t.json());
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["b"].get<double>(), 0.1);
  EXPECT_EQ(j[1]["b"], "inf");
  EXPECT_EQ(Table({{"a"}, {}}).csv(), "a\n");
}

TEST(NumbersTable, ValuesAreLibraryValues) {
  const Table t = numbers_table({Deform::ile}, {3.0}, Grid{0.0, 1.0, 5});
  ASSERT_EQ(t.rows.size(), 5u);
  for (const auto& r : t.rows) {
    const double x = r[2].number.value();
    EXPECT_TRUE(same(r[3].number, deform(Deform::ile, 3.0, x)));
    EXPECT_EQ(r[4].text, x >= 0.5 ? "divergent" : "regular");
  }
}

TEST(NumbersTable, OleHorizontalAsymptote) {
  const Table t = numbers_table({Deform::ole}, {-1.0}, Grid{-40.0, -30.0, 3});
  for (const auto& r : t.rows) {
    EXPECT_NEAR(r[3].number.value(), -0.5, 1e-12);
    EXPECT_EQ(r[4].text, "regular");
  }
}

TEST(NumbersTable, Regions) {
  EXPECT_EQ(region(Deform::ile, 0.5, -3.0), "cutoff");
  EXPECT_EQ(region(Deform::iel, 0.5, 0.0), "undefined");
  EXPECT_EQ(region(Deform::oel, 0.5, 0.1), "cutoff");
  EXPECT_EQ(region(Deform::oel, 2.0, 0.1), "regular");
  EXPECT_EQ(region(Deform::oel, 2.0, 3.0), "divergent");
}

TEST(AsymptoteTable, Tags) {
  const Table t = asymptote_table({Deform::ile, Deform::ole, Deform::oel}, {-1.0, 1.0, 3.0});
  ASSERT_EQ(t.rows.size(), 6u);
  // ile q=3: vertical at x = 1/(q-1) = 0.5
  EXPECT_EQ(t.rows[1][2].text, "vertical");
  EXPECT_EQ(t.rows[1][3].number.value(), 0.5);
  // ole q=-1: horizontal at -1/(1-q) = -0.5
  EXPECT_EQ(t.rows[2][2].text, "horizontal");
  EXPECT_EQ(t.rows[2][4].number.value(), -0.5);
  EXPECT_EQ(t.rows[4][2].text, "cutoff");
  EXPECT_EQ(t.rows[5][2].text, "vertical");
}

namespace {

// far from the analytic border |y| = (1 - |x|^(1-q))^(1/(1-q)) in the grid metric
void check_map(double q) {
  const Grid x{-3.0, 3.0, 61}, y{-3.0, 3.0, 61};
  const Table t = cutoff_map(Deform::oel, Op::mul, q, x, y);
  const double omq = 1.0 - q, step = 0.1;
  std::size_t checked = 0, flagged = 0;
  for (const auto& r : t.rows) {
    if (r[0].text != "cell") continue;
    const double xv = r[1].number.value(), yv = r[2].number.value();
    const auto side = [&](double a, double b) {
      return std::pow(std::abs(a), omq) + std::pow(std::abs(b), omq) - 1.0 <= 0.0;
    };
    bool near = false;
    for (double dx : {-step, 0.0, step})
      for (double dy : {-step, 0.0, step})
        if (side(xv + dx, yv + dy) != side(xv, yv)) near = true;
    if (near || xv == 0.0 || yv == 0.0) continue;
    ++checked;
    flagged += r[3].number.value() == 1.0;
    EXPECT_EQ(r[3].number.value() == 1.0, side(xv, yv)) << q << " " << xv << " " << yv;
  }
  EXPECT_GT(checked, 1000u);
  EXPECT_GT(flagged, 0u);
}

}  // namespace

TEST(CutoffMap, ClosedRegionBelowZero) { check_map(-1.0); }
TEST(CutoffMap, OpenRegionAboveOne) { check_map(3.0); }

TEST(CutoffMap, ClassicalHasNoCutoff) {
  const Table t = cutoff_map(Deform::oel, Op::mul, 1.0, Grid{-2, 2, 21}, Grid{-2, 2, 21});
  for (const auto& r : t.rows) EXPECT_EQ(r[3].number.value(), 0.0);
}

TEST(CutoffMap, BorderRowsLieOnBorder) {
  const Table t = cutoff_map(Deform::oel, Op::mul, -1.0, Grid{-1, 1, 9}, Grid{-1, 1, 3});
  std::size_t border = 0;
  for (const auto& r : t.rows) {
    if (r[0].text != "border") continue;
    ++border;
    const double xv = r[1].number.value(), yv = r[2].number.value();
    EXPECT_NEAR(xv * xv + yv * yv, 1.0, 1e-12);
  }
  EXPECT_GT(border, 0u);
  EXPECT_THROW(cutoff_map(Deform::oel, Op::div, -1.0, Grid{-1, 1, 3}, Grid{-1, 1, 3}), std::invalid_argument);
}

TEST(TwoState, Values) {
  const Table t = two_state_table({Deform::oel}, {2.0}, Grid{0.0, 1.0, 3});
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0][3].number.value(), 0.0);
  EXPECT_FALSE(std::signbit(t.rows[0][3].number.value()));
  EXPECT_NEAR(t.rows[1][3].number.value(), 0.5, 1e-15);
}

TEST(VsW, BoltzmannIsStraightLine) {
  const Table t = vs_w_table({Deform::oel}, {1.0}, Grid{1.0, 1e6, 61});
  ASSERT_GT(t.rows.size(), 10u);
  for (const auto& r : t.rows) EXPECT_NEAR(r[4].number.value(), r[3].number.value(), 1e-9 * (1 + r[3].number.value()));
}

TEST(VsW, LogSpacedDistinct) {
  const auto w = log_spaced_w(Grid{1.0, 100.0, 50});
  for (std::size_t i = 1; i < w.size(); ++i) EXPECT_GT(w[i], w[i - 1]);
  EXPECT_EQ(w.front(), 1.0);
  EXPECT_EQ(w.back(), 100.0);
}

TEST(Admissibility, JsonShape) {
  const auto j = nlohmann::json::parse(admissibility_json({Deform::iel}, {2.0}, 101));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["class"], "iel");
  EXPECT_TRUE(j[0]["certainty_zero"].get<bool>());
}
