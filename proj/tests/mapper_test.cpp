#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "core/channel.hpp"
#include "core/error.hpp"
#include "core/mapper.hpp"
#include "matrix_problem.hpp"
#include "oracles.hpp"

using namespace uavhet;
using testing_support::MatrixProblem;
using testing_support::random_problem;

TEST(RankZones, DescendingAndStableOnTies) {
  const std::vector<double> c{3.0, 9.0, 3.0, 1.0, 9.0};
  const auto r = rank_zones(c);
  EXPECT_EQ(r, (std::vector<std::size_t>{1, 4, 0, 2, 3}));
}

TEST(RankZones, RejectsNaN) {
  const std::vector<double> c{1.0, std::numeric_limits<double>::quiet_NaN()};
  EXPECT_THROW(rank_zones(c), Error);
}

TEST(Greedy, CheapestUavTakesCostliestZone) {
  const std::vector<double> uav{5.0, 1.0, 3.0};
  const std::vector<std::size_t> ranked{2, 0, 1};
  const auto a = greedy_assign(uav, ranked);
  EXPECT_EQ(a.zone_of(1), 2u);
  EXPECT_EQ(a.zone_of(2), 0u);
  EXPECT_EQ(a.zone_of(0), 1u);
}

TEST(Greedy, WrapsWhenUavsOutnumberZones) {
  const std::vector<double> uav{1, 2, 3, 4, 5};
  const std::vector<std::size_t> ranked{1, 0};
  const auto a = greedy_assign(uav, ranked);
  EXPECT_EQ(a.uavs_per_zone(2), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(a.zone_of(4), 1u);
}

TEST(Greedy, IneligibleUavsStayUnmapped) {
  const std::vector<double> uav{1.0, kIneligible, 2.0};
  const std::vector<std::size_t> ranked{0, 1, 2};
  const auto a = greedy_assign(uav, ranked);
  EXPECT_FALSE(a.zone_of(1).has_value());
  EXPECT_EQ(a.pairs.size(), 2u);
}

TEST(Greedy, MatchesHandRuleOnRandomInstances) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    auto p = random_problem(rng, 4, 4);
    const auto a = greedy_assign(p.uav, rank_zones(p.area));
    const auto hand = oracle::hand_greedy(p.uav, p.area);
    for (std::size_t u = 0; u < 4; ++u) EXPECT_EQ(a.zone_of(u), hand[u]);
  }
}

TEST(Mapping, NeverWorseThanAverageMatching) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    auto p = random_problem(rng, 3, 3);
    Rng mr(1);
    const auto a = iterate_mapping(p, MapperOptions{}, mr);
    ASSERT_TRUE(a.converged);
    const double area_term = p.area[0] + p.area[1] + p.area[2];
    std::vector<std::vector<double>> scaled = p.pair;
    for (auto& row : scaled) {
      for (auto& c : row) c /= 3.0;
    }
    const double mean = oracle::mean_over_matchings(scaled) + area_term;
    EXPECT_LE(a.final_cost, mean);
    EXPECT_GE(a.final_cost, oracle::min_over_matchings(scaled) + area_term - 1e-9);
  }
}

TEST(Mapping, HistoryStrictlyDecreases) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 50; ++t) {
    auto p = random_problem(rng, 6, 6);
    Rng mr(2);
    const auto a = iterate_mapping(p, MapperOptions{}, mr);
    ASSERT_FALSE(a.history.empty());
    for (std::size_t i = 1; i < a.history.size(); ++i) EXPECT_LT(a.history[i], a.history[i - 1]);
    EXPECT_EQ(a.final_cost, a.history.back());
  }
}

TEST(Mapping, StaticCostsConvergeInOneAcceptedStep) {
  std::mt19937_64 rng(31);
  auto p = random_problem(rng, 6, 6);
  Rng mr(3);
  const auto a = iterate_mapping(p, MapperOptions{}, mr);
  EXPECT_EQ(a.iterations, 1u);
  EXPECT_TRUE(a.converged);
  EXPECT_LE(a.passes, 3u);
}

TEST(Mapping, OrdinalTransformKeepsPairing) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 50; ++t) {
    auto p = random_problem(rng, 5, 5);
    auto q = p;
    for (auto& c : q.uav) c = c * c * c + 1.0;
    const auto a = greedy_assign(p.uav, rank_zones(p.area));
    const auto b = greedy_assign(q.uav, rank_zones(q.area));
    EXPECT_EQ(a.pairing(5), b.pairing(5));
  }
}

TEST(Mapping, AllIneligibleLeavesNothingMapped) {
  MatrixProblem p;
  p.uav = {kIneligible, kIneligible};
  p.area = {1.0, 2.0};
  p.pair = {{1, 1}, {1, 1}};
  Rng mr(1);
  const auto a = iterate_mapping(p, MapperOptions{}, mr);
  EXPECT_TRUE(a.pairs.empty());
  EXPECT_FALSE(a.converged);
}

TEST(Mapping, IterationCapIsHonoured) {
  std::mt19937_64 rng(41);
  auto p = random_problem(rng, 4, 4);
  Rng mr(4);
  MapperOptions o;
  o.max_iters = 1;
  const auto a = iterate_mapping(p, o, mr);
  EXPECT_EQ(a.passes, 1u);
}

TEST(Hover, CentroidAtLowestAltitudeCoveringUsers) {
  const double rad = 10.0 * std::numbers::pi / 180.0;
  std::vector<Point2> users;
  for (int i = 0; i < 20; ++i) {
    const double a = i * kTwoPi / 20;
    users.push_back({100 + 500 * std::cos(a), 50 + 500 * std::sin(a)});
  }
  const Point3 p = uav_position_for_zone(users, {0, 0}, 200, 500, rad, 0.95);
  EXPECT_NEAR(p.x, 100, 1e-9);
  EXPECT_NEAR(p.y, 50, 1e-9);
  EXPECT_GE(p.z, feet_to_meters(200) - 1e-9);
  EXPECT_LE(p.z, feet_to_meters(500) + 1e-9);
  EXPECT_NEAR(p.z, 500 * std::tan(rad), 1e-6);
  ChannelParams gate;
  gate.los_min_elevation_rad = rad;
  int seen = 0;
  for (const auto& u : users) seen += los_available(LinkGeometry::between(p, u), gate);
  EXPECT_GE(seen, 19);
}

TEST(Hover, ClampsToAltitudeBand) {
  const double rad = 10.0 * std::numbers::pi / 180.0;
  const std::vector<Point2> near{{1, 0}, {-1, 0}};
  EXPECT_DOUBLE_EQ(uav_position_for_zone(near, {0, 0}, 200, 500, rad, 0.95).z, feet_to_meters(200));
  const std::vector<Point2> far{{5000, 0}, {-5000, 0}};
  EXPECT_DOUBLE_EQ(uav_position_for_zone(far, {0, 0}, 200, 500, rad, 0.95).z, feet_to_meters(500));
  const Point3 empty = uav_position_for_zone({}, {7, 8}, 200, 500, rad, 0.95);
  EXPECT_EQ(empty.x, 7.0);
  EXPECT_EQ(empty.y, 8.0);
}
