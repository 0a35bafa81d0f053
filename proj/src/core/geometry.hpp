#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace uavhet {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Point2 ground() const { return {x, y}; }
  friend bool operator==(const Point3&, const Point3&) = default;
};

using Polygon = std::vector<Point2>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kMetersPerFoot = 0.3048;

inline double feet_to_meters(double ft) { return ft * kMetersPerFoot; }
inline double meters_to_feet(double m) { return m / kMetersPerFoot; }

inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline double distance(Point3 a, Point2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy + a.z * a.z);
}

inline double distance(Point3 a, Point3 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// Maps any angle into [0, 2π).
inline double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

inline double angle_of(Point2 p, Point2 center) {
  return wrap_angle(std::atan2(p.y - center.y, p.x - center.x));
}

// Shoelace formula; positive for counter-clockwise vertex order.
double signed_area(std::span<const Point2> poly);

// Even-odd ray casting. Boundary points may land on either side.
bool point_in_polygon(Point2 p, std::span<const Point2> poly);

Point2 polygon_centroid(std::span<const Point2> poly);

}  // namespace uavhet
