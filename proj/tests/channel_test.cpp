#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "core/channel.hpp"
#include "core/error.hpp"
#include "core/scenario.hpp"
#include "oracles.hpp"

using namespace uavhet;

TEST(Channel, DecibelConversions) {
  EXPECT_DOUBLE_EQ(dbm_to_watts(30.0), 1.0);
  EXPECT_NEAR(dbm_to_watts(35.0), 3.1622776601683795, 1e-15);
  EXPECT_NEAR(watts_to_dbm(0.001), 0.0, 1e-12);
  EXPECT_NEAR(linear_to_db(db_to_linear(-11.0)), -11.0, 1e-12);
}

TEST(Channel, NoiseFloorIsMinus100dBm) {
  const auto p = uav_channel(Scenario{});
  EXPECT_NEAR(watts_to_dbm(p.noise_power_w()), -100.0, 1e-9);
}

TEST(Channel, SingleUavSnrMatchesDecibelBudget) {
  const Scenario s;
  const auto p = uav_channel(s);
  const std::vector<Point3> tx{{0, 0, 300}};
  const Point2 ue{400, 0};  // 500 m slant range
  const double got = linear_to_db(sinr(ue, 0, tx, p));
  const double want = oracle::snr_db(35, -11, 4, 500, -170, 10e6);
  EXPECT_NEAR(got, want, 1e-9);
  EXPECT_NEAR(want, 16.0, 0.1);
}

TEST(Channel, SlantDistanceIsEuclidean) {
  const auto g = LinkGeometry::between({10, 20, 120}, {10 + 90, 20});
  EXPECT_NEAR(g.distance, 150.0, 1e-12);
  EXPECT_NEAR(g.elevation, std::atan2(120.0, 90.0), 1e-15);
}

TEST(Channel, LosNeedsMinimumElevation) {
  const auto p = uav_channel(Scenario{});
  const double h = 100.0;
  const double edge = h / std::tan(10.0 * std::numbers::pi / 180.0);
  EXPECT_TRUE(los_available(LinkGeometry::between({0, 0, h}, {edge * 0.999, 0}), p));
  EXPECT_FALSE(los_available(LinkGeometry::between({0, 0, h}, {edge * 1.001, 0}), p));
}

TEST(Channel, DistanceClampedAtOneMetre) {
  const auto p = uav_channel(Scenario{});
  EXPECT_EQ(rx_power(0.0, p), rx_power(1.0, p));
  EXPECT_EQ(rx_power(0.5, p), rx_power(1.0, p));
  EXPECT_TRUE(std::isfinite(rx_power(0.0, p)));
}

TEST(Channel, AddingAnInterfererNeverRaisesSinr) {
  const auto p = uav_channel(Scenario{});
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> xy(-2000, 2000), z(60, 160);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Point3> tx{{xy(rng), xy(rng), z(rng)}};
    const Point2 ue{xy(rng), xy(rng)};
    double prev = sinr(ue, 0, tx, p);
    for (int k = 0; k < 6; ++k) {
      tx.push_back({xy(rng), xy(rng), z(rng)});
      const double next = sinr(ue, 0, tx, p);
      EXPECT_LE(next, prev);
      prev = next;
    }
  }
}

TEST(Channel, RoundRobinDividesSpectralEfficiency) {
  const auto one = spectral_efficiency(3.0, 10e6, 1);
  EXPECT_DOUBLE_EQ(one.se_bps_hz, 2.0);
  EXPECT_DOUBLE_EQ(one.rate_bps, 20e6);
  const auto four = spectral_efficiency(3.0, 10e6, 4);
  EXPECT_DOUBLE_EQ(four.se_bps_hz, 0.5);
  EXPECT_THROW(spectral_efficiency(3.0, 10e6, 0), Error);
}

TEST(Channel, ServingIndexMustExist) {
  const auto p = uav_channel(Scenario{});
  const std::vector<Point3> tx{{0, 0, 100}};
  EXPECT_THROW(sinr({0, 0}, 1, tx, p), Error);
}
