#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "core/cost.hpp"
#include "core/error.hpp"
#include "oracles.hpp"

using namespace uavhet;

namespace {

double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST(Poisson, MatchesHighPrecisionOracle) {
  for (double lambda : {0.1, 0.5, 1.0, 2.5, 7.0, 10.0}) {
    for (std::int64_t k = 0; k <= 60; k += 3) {
      EXPECT_LE(rel_err(poisson_pmf(lambda, k), oracle::poisson_pmf(lambda, k)), 1e-12)
          << "lambda=" << lambda << " k=" << k;
    }
  }
}

TEST(Poisson, ZeroRate) {
  EXPECT_EQ(poisson_pmf(0.0, 0), 1.0);
  EXPECT_EQ(poisson_pmf(0.0, 3), 0.0);
  EXPECT_THROW(poisson_pmf(-1.0, 0), Error);
  EXPECT_THROW(poisson_pmf(1.0, -1), Error);
}

TEST(Density, AreaUsesUserShareOfCapacity) {
  // 600 users over T_r = 1200 gives rate 0.5.
  EXPECT_DOUBLE_EQ(density_area(600, 1200, 4), poisson_pmf(0.5, 4));
  EXPECT_NEAR(density_area(600, 1200, 0), std::exp(-0.5), 1e-15);
}

TEST(Density, UavUsesLoadPerUav) {
  EXPECT_DOUBLE_EQ(density_uav(12.0, 6, 3), poisson_pmf(2.0, 3));
  EXPECT_THROW(density_uav(1.0, 0, 3), Error);
}

TEST(Density, FullOccupancyReducesToAverageForm) {
  for (std::int64_t k = 0; k <= 50; ++k) {
    EXPECT_EQ(density_area(1200, 1200, k), density_area_average(k)) << k;
    EXPECT_LE(rel_err(density_area_average(k), oracle::poisson_at_one(k)), 1e-12);
  }
}

TEST(Admission, AllHandledNothingDropped) {
  std::vector<RequestOutcome> r(10, {true, false});
  const auto a = admission_constraint(r, 1200, 1200);
  EXPECT_DOUBLE_EQ(a.lhs, 1.0);
  EXPECT_DOUBLE_EQ(a.rhs, 1.0);
  EXPECT_TRUE(a.ok);
  EXPECT_FALSE(admission_constraint(r, 600, 1200).ok);
}

TEST(Admission, DropsCancelHandling) {
  std::vector<RequestOutcome> r{{true, true}, {true, false}, {true, true}, {true, false}};
  const auto a = admission_constraint(r, 600, 1200);
  EXPECT_DOUBLE_EQ(a.lhs, std::sqrt(0.5));
  EXPECT_FALSE(a.ok);
}

TEST(Admission, NegativeRadicandIsInfeasible) {
  std::vector<RequestOutcome> r{{false, true}, {false, true}};
  const auto a = admission_constraint(r, 600, 1200);
  EXPECT_TRUE(a.infeasible);
  EXPECT_FALSE(a.ok);
  const auto sq = admission_constraint(r, 1200, 1200, true);
  EXPECT_FALSE(sq.infeasible);
  EXPECT_DOUBLE_EQ(sq.lhs, 1.0);
}

TEST(Costs, AreaCostFormula) {
  EXPECT_DOUBLE_EQ(cost_area(0.1, 2.0, 40, 1200, 1.0, 1.0), 0.1 * 2.0 * 1240);
  EXPECT_DOUBLE_EQ(cost_area(0.1, 2.0, 40, 1200, 0.5, 1.0), 0.1 * 2.0 * 1220);
}

TEST(Costs, UavCostFormulaAndLosGate) {
  EXPECT_DOUBLE_EQ(cost_uav(0.2, 1000, 2000, 4, 40, 60, 1, 1, true), 0.2 * 0.0625 * 100);
  EXPECT_EQ(cost_uav(0.2, 1000, 2000, 4, 40, 60, 1, 1, false), kIneligible);
}

TEST(Costs, OverallUsesUnitFloorForUnservedZones) {
  const std::vector<double> uav{2.0, 4.0};
  const std::vector<double> area{10.0, 6.0, 8.0};
  const std::vector<std::size_t> per{2, 0, 1};
  EXPECT_DOUBLE_EQ(overall_cost(uav, area, per, 2), 3.0 + 5.0 + 6.0 + 8.0);
  const std::vector<std::size_t> bad{1, 1};
  EXPECT_THROW(overall_cost(uav, area, bad, 2), Error);
}
