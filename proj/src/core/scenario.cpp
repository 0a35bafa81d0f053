#include "core/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace uavhet {

namespace {

void check(bool cond, const std::string& msg) { require(cond, ErrorCode::kConfig, msg); }

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void validate(const Scenario& s) {
  check(finite_positive(s.area_side_m), "area_side_m must be > 0");
  check(s.mbs_count > 0, "mbs_count must be > 0");
  check(finite_positive(s.cell_radius_m), "cell_radius_m must be > 0");
  check(s.users_per_cell_max > 0, "users_per_cell_max must be > 0");
  check(s.uav_count > 0, "uav_count must be > 0");
  check(s.uav_capacity > 0, "uav_capacity must be > 0");
  check(std::isfinite(s.noise_psd_dbm_hz), "noise_psd_dbm_hz must be finite");
  check(finite_positive(s.packet_size_bytes), "packet_size_bytes must be > 0");
  check(finite_positive(s.altitude_min_ft), "altitude_min_ft must be > 0");
  check(std::isfinite(s.altitude_max_ft) && s.altitude_min_ft <= s.altitude_max_ft,
        "altitude range must satisfy 0 < min <= max");
  check(finite_positive(s.offered_traffic_bps), "offered_traffic_bps must be > 0");
  check(std::isfinite(s.pathloss_exp) && s.pathloss_exp >= 2.0, "pathloss_exp must be >= 2");
  check(std::isfinite(s.tx_const_db), "tx_const_db must be finite");
  check(std::isfinite(s.uav_power_dbm), "uav_power_dbm must be finite");
  check(s.requests_per_zone_min > 0 && s.requests_per_zone_min <= s.requests_per_zone_max,
        "request band must satisfy 0 < requests_per_zone_min <= requests_per_zone_max");
  check(finite_positive(s.bandwidth_hz), "bandwidth_hz must be > 0");
  check(s.active_users >= 0, "active_users must be >= 0");
  check(s.active_users <= static_cast<long long>(s.users_per_cell_max) * s.mbs_count,
        "active_users must not exceed users_per_cell_max * mbs_count");
  check(s.extra_users >= 0, "extra_users must be >= 0");
  check(2.0 * (s.active_users + s.extra_users) <=
            3.0 * static_cast<double>(s.users_per_cell_max) * s.mbs_count,
        "active_users + extra_users must not exceed 1.5 * users_per_cell_max * mbs_count");
  check(s.eta1 >= 0.5 && s.eta1 <= 1.0, "eta1 must lie in [0.5, 1]");
  check(s.eta2 >= s.eta1 && s.eta2 <= 1.0, "eta2 must lie in [eta1, 1]");
  check(finite_positive(s.backhaul_cap_bps), "backhaul_cap_bps must be > 0");
  check(finite_positive(s.delay_threshold_s), "delay_threshold_s must be > 0");
  check(finite_positive(s.sinr_threshold), "sinr_threshold must be > 0");
  check(finite_positive(s.se_coverage_threshold), "se_coverage_threshold must be > 0");
  check(std::isfinite(s.los_min_elevation_deg) && s.los_min_elevation_deg >= 0.0 &&
            s.los_min_elevation_deg <= 90.0,
        "los_min_elevation_deg must lie in [0, 90]");
  check(s.los_coverage_fraction > 0.0 && s.los_coverage_fraction <= 1.0,
        "los_coverage_fraction must lie in (0, 1]");
  check(std::isfinite(s.mbs_power_dbm), "mbs_power_dbm must be finite");
  check(std::isfinite(s.mbs_height_m) && s.mbs_height_m >= 0.0, "mbs_height_m must be >= 0");
  check(s.mbs_capacity > 0, "mbs_capacity must be > 0");
  check(std::isfinite(s.processing_delay_s) && s.processing_delay_s >= 0.0,
        "processing_delay_s must be >= 0");
  check(finite_positive(s.propagation_speed_mps), "propagation_speed_mps must be > 0");
  check(s.max_zones >= 1, "max_zones must be >= 1");
  check(s.uav_count <= s.max_zones, "uav_count must not exceed max_zones");
}

int users_in_cell(int total, int cells, int cell) {
  const int base = total / cells;
  return base + (cell < total % cells ? 1 : 0);
}

double base_request_rate(const Scenario& s) {
  const double mid = 0.5 * (s.requests_per_zone_min + s.requests_per_zone_max);
  const double per_cell = static_cast<double>(s.active_users) / s.mbs_count;
  if (per_cell <= 0.0) return 0.0;
  return mid * s.uav_count / per_cell;
}

bool Zone::contains_angle(double theta) const {
  if (angle_span >= kTwoPi) return true;
  return wrap_angle(theta - angle_begin) < angle_span;
}

// ---------------------------------------------------------------------------

AngularDemand::AngularDemand(std::vector<double> bins) : bins_(std::move(bins)) {
  require(!bins_.empty(), ErrorCode::kInvalidArgument, "angular demand needs at least one bin");
  for (double w : bins_) {
    require(std::isfinite(w) && w >= 0.0, ErrorCode::kInvalidArgument,
            "angular demand weights must be finite and non-negative");
  }
}

AngularDemand AngularDemand::uniform(std::size_t bins) {
  return AngularDemand(std::vector<double>(bins, 1.0));
}

double AngularDemand::total() const {
  double t = 0.0;
  for (double w : bins_) t += w;
  return t;
}

namespace {

// Visits [a, b) bin by bin: f(seg_begin, seg_end, density) in the unwrapped frame.
template <typename F>
void for_each_segment(std::span<const double> bins, double width, double a, double b, F&& f) {
  if (!(b > a)) return;
  const auto n = static_cast<long long>(bins.size());
  double s = a;
  while (s < b) {
    const double k = std::floor(s / width);
    double e = std::min(b, (k + 1.0) * width);
    if (e <= s) e = std::nextafter(s, b);  // guard against a stuck boundary
    long long idx = static_cast<long long>(k) % n;
    if (idx < 0) idx += n;
    f(s, e, bins[static_cast<std::size_t>(idx)] / width);
    s = e;
  }
}

}  // namespace

double AngularDemand::mass(double a, double b) const {
  double m = 0.0;
  for_each_segment(bins_, bin_width(), a, b, [&](double s, double e, double d) { m += d * (e - s); });
  return m;
}

double AngularDemand::moment(double a, double b) const {
  double m = 0.0;
  for_each_segment(bins_, bin_width(), a, b,
                   [&](double s, double e, double d) { m += d * 0.5 * (e * e - s * s); });
  return m;
}

double AngularDemand::centroid(double a, double b) const {
  const double m = mass(a, b);
  if (!(m > 0.0)) return 0.5 * (a + b);
  return moment(a, b) / m;
}

// ---------------------------------------------------------------------------

Polygon build_hex_cell(Point2 center, double radius) {
  require(std::isfinite(radius) && radius > 0.0, ErrorCode::kInvalidArgument,
          "hexagon radius must be > 0");
  Polygon hex;
  hex.reserve(6);
  for (int i = 0; i < 6; ++i) {
    const double a = i * std::numbers::pi / 3.0;
    hex.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
  }
  return hex;
}

double hex_area(double radius) { return 1.5 * std::sqrt(3.0) * radius * radius; }

Point2 hex_boundary_point(Point2 center, double radius, double theta) {
  constexpr double kSector = std::numbers::pi / 3.0;
  const double t = wrap_angle(theta);
  const int i = std::min(5, static_cast<int>(std::floor(t / kSector)));
  const double apothem_dir = i * kSector + kSector / 2.0;
  const double d = radius * std::cos(kSector / 2.0) / std::cos(t - apothem_dir);
  return {center.x + d * std::cos(t), center.y + d * std::sin(t)};
}

namespace {

Polygon sector_polygon(Point2 center, double radius, double begin, double span) {
  if (span >= kTwoPi) return build_hex_cell(center, radius);
  Polygon poly{center, hex_boundary_point(center, radius, begin)};
  // Hex vertices sit at multiples of π/3; keep those strictly inside the sector.
  std::vector<double> inner;
  for (int v = 0; v < 6; ++v) {
    const double off = wrap_angle(v * std::numbers::pi / 3.0 - begin);
    if (off > 1e-12 && off < span - 1e-12) inner.push_back(off);
  }
  std::sort(inner.begin(), inner.end());
  for (double off : inner) {
    const double a = begin + off;
    poly.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
  }
  poly.push_back(hex_boundary_point(center, radius, begin + span));
  return poly;
}

}  // namespace

std::vector<Zone> partition_zones(Point2 center, double radius, const AngularDemand& demand,
                                  int k, int max_zones) {
  require(std::isfinite(radius) && radius > 0.0, ErrorCode::kInvalidArgument,
          "cell radius must be > 0");
  require(k >= 1, ErrorCode::kInvalidArgument, "zone count must be >= 1");
  require(k <= max_zones, ErrorCode::kInvalidArgument,
          "zone count " + std::to_string(k) + " exceeds maximum " + std::to_string(max_zones));

  const AngularDemand effective = demand.total() > 0.0 ? demand : AngularDemand::uniform();

  std::vector<Zone> zones;
  if (k == 1) {
    Zone z;
    z.polygon = build_hex_cell(center, radius);
    zones.push_back(std::move(z));
    return zones;
  }

  std::vector<double> rays;
  if (k >= kStandardGuiderLines) {
    for (int i = 0; i < kStandardGuiderLines; ++i) rays.push_back(i * kTwoPi / kStandardGuiderLines);
  } else {
    rays.push_back(0.0);
  }

  while (static_cast<int>(rays.size()) < k) {
    std::size_t hottest = 0;
    double best_mass = -1.0;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const double a = rays[i];
      const double b = i + 1 < rays.size() ? rays[i + 1] : rays[0] + kTwoPi;
      const double m = effective.mass(a, b);
      if (m > best_mass) {
        best_mass = m;
        hottest = i;
      }
    }
    const double a = rays[hottest];
    const double b = hottest + 1 < rays.size() ? rays[hottest + 1] : rays[0] + kTwoPi;
    double c = effective.centroid(a, b);
    const double margin = 1e-9 * (b - a);
    if (!(c > a + margin && c < b - margin)) c = 0.5 * (a + b);
    rays.push_back(wrap_angle(c));
    std::sort(rays.begin(), rays.end());
  }

  zones.reserve(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const double a = rays[i];
    const double b = i + 1 < rays.size() ? rays[i + 1] : rays[0] + kTwoPi;
    Zone z;
    z.id = i;
    z.angle_begin = a;
    z.angle_span = b - a;
    z.polygon = sector_polygon(center, radius, a, b - a);
    zones.push_back(std::move(z));
  }
  return zones;
}

std::size_t find_zone(std::span<const Zone> zones, Point2 center, Point2 p) {
  const double theta = angle_of(p, center);
  for (std::size_t i = 0; i < zones.size(); ++i) {
    if (zones[i].contains_angle(theta)) return i;
  }
  return kNoZone;
}

std::int64_t min_uav_count(std::int64_t total_requests, std::int64_t per_uav_capacity) {
  require(per_uav_capacity > 0, ErrorCode::kInvalidArgument, "per-UAV capacity must be > 0");
  require(total_requests >= 0, ErrorCode::kInvalidArgument, "request count must be >= 0");
  return (total_requests + per_uav_capacity - 1) / per_uav_capacity;
}

std::vector<UserEquipment> place_users(Point2 center, double radius, std::span<const Zone> zones,
                                       std::span<const double> zone_weights, std::size_t count,
                                       std::uint64_t seed) {
  require(zones.size() == zone_weights.size(), ErrorCode::kInvalidArgument,
          "one weight per zone required");
  double total = 0.0;
  for (double w : zone_weights) {
    require(std::isfinite(w) && w >= 0.0, ErrorCode::kInvalidArgument,
            "zone weights must be finite and non-negative");
    total += w;
  }
  std::vector<UserEquipment> users;
  if (count == 0) return users;
  require(total > 0.0, ErrorCode::kInvalidArgument, "zone weights must not all be zero");

  const Polygon hex = build_hex_cell(center, radius);
  Rng rng(seed);
  std::discrete_distribution<std::size_t> pick(zone_weights.begin(), zone_weights.end());

  users.reserve(count);
  for (std::size_t id = 0; id < count; ++id) {
    const Zone& z = zones[pick(rng)];
    double lo_x = z.polygon.front().x, hi_x = lo_x;
    double lo_y = z.polygon.front().y, hi_y = lo_y;
    for (const auto& v : z.polygon) {
      lo_x = std::min(lo_x, v.x);
      hi_x = std::max(hi_x, v.x);
      lo_y = std::min(lo_y, v.y);
      hi_y = std::max(hi_y, v.y);
    }
    std::uniform_real_distribution<double> ux(lo_x, hi_x);
    std::uniform_real_distribution<double> uy(lo_y, hi_y);
    Point2 p;
    do {
      p = {ux(rng), uy(rng)};
    } while (!(point_in_polygon(p, hex) && z.contains_angle(angle_of(p, center))));
    users.push_back({id, p, true, 0});
  }
  return users;
}

void attach_users(std::vector<Zone>& zones, Point2 center, std::span<const UserEquipment> users) {
  for (auto& z : zones) z.users.clear();
  for (const auto& u : users) {
    const std::size_t zi = find_zone(zones, center, u.position);
    if (zi != kNoZone) zones[zi].users.push_back(u.id);
  }
}

}  // namespace uavhet
