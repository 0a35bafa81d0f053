#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "core/geometry.hpp"

using namespace uavhet;

TEST(Geometry, WrapAngleLandsInHalfOpenRange) {
  EXPECT_DOUBLE_EQ(wrap_angle(-std::numbers::pi / 2), 1.5 * std::numbers::pi);
  EXPECT_DOUBLE_EQ(wrap_angle(5 * std::numbers::pi), std::numbers::pi);
  EXPECT_GE(wrap_angle(-1e-18), 0.0);
  EXPECT_LT(wrap_angle(-1e-18), kTwoPi);
  EXPECT_EQ(wrap_angle(0.0), 0.0);
}

TEST(Geometry, DistancesMatchPythagoras) {
  EXPECT_DOUBLE_EQ(distance(Point2{0, 0}, Point2{3, 4}), 5.0);
  EXPECT_DOUBLE_EQ(distance(Point3{0, 0, 12}, Point2{3, 4}), 13.0);
  EXPECT_DOUBLE_EQ(distance(Point3{1, 1, 1}, Point3{1, 1, 1}), 0.0);
}

TEST(Geometry, FeetRoundTrip) {
  EXPECT_DOUBLE_EQ(feet_to_meters(500.0), 152.4);
  EXPECT_NEAR(meters_to_feet(feet_to_meters(350.0)), 350.0, 1e-12);
}

TEST(Geometry, SquareAreaCentroidAndContainment) {
  const Polygon sq{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  EXPECT_DOUBLE_EQ(signed_area(sq), 4.0);
  const Point2 c = polygon_centroid(sq);
  EXPECT_DOUBLE_EQ(c.x, 1.0);
  EXPECT_DOUBLE_EQ(c.y, 1.0);
  EXPECT_TRUE(point_in_polygon({1, 1}, sq));
  EXPECT_FALSE(point_in_polygon({3, 1}, sq));
  EXPECT_FALSE(point_in_polygon({-0.1, 1}, sq));
}

TEST(Geometry, AngleOfIsMeasuredFromCenter) {
  EXPECT_DOUBLE_EQ(angle_of({10, 10}, {10, 0}), std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(angle_of({0, -1}, {0, 0}), 1.5 * std::numbers::pi);
}
