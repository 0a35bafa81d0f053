#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "core/geometry.hpp"

namespace uavhet {

/// Full experiment configuration. Defaults are the reference parameter set
/// scaled to a single macro cell.
struct Scenario {
  double area_side_m = 10000.0;
  int mbs_count = 1;
  double cell_radius_m = 2000.0;
  int users_per_cell_max = 1200;  // T_r
  int uav_count = 6;              // n, per macro cell
  int uav_capacity = 200;         // S_n, requests per UAV per step
  double noise_psd_dbm_hz = -170.0;
  double packet_size_bytes = 1024.0;
  double altitude_min_ft = 200.0;
  double altitude_max_ft = 500.0;
  double offered_traffic_bps = 256000.0;  // γ/μ
  double pathloss_exp = 4.0;
  double tx_const_db = -11.0;
  double uav_power_dbm = 35.0;
  int requests_per_zone_min = 30;  // S_r band
  int requests_per_zone_max = 50;
  double bandwidth_hz = 10e6;
  int active_users = 400;  // x, total over all cells
  int extra_users = 0;
  double eta1 = 1.0;
  double eta2 = 1.0;
  std::uint64_t seed = 1;
  bool uavs_enabled = true;
  double backhaul_cap_bps = 1.2e9;
  double delay_threshold_s = 0.2;
  double sinr_threshold = 0.55;
  double se_coverage_threshold = 0.03;
  double los_min_elevation_deg = 10.0;
  double los_coverage_fraction = 0.95;
  double mbs_power_dbm = 46.0;
  double mbs_height_m = 30.0;
  int mbs_capacity = 1200;
  double processing_delay_s = 0.002;
  double propagation_speed_mps = 3e8;
  int max_zones = 12;
  bool admission_squared = false;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws Error(kConfig) describing the first violated invariant.
void validate(const Scenario& s);

/// Users placed in cell `cell` when the total is split evenly across cells.
int users_in_cell(int total, int cells, int cell);

/// Expected per-user request rate (requests/s) that puts the mid-band S_r
/// into every zone at the configured base population.
double base_request_rate(const Scenario& s);

struct UserEquipment {
  std::size_t id = 0;
  Point2 position;
  bool active = true;
  std::uint32_t pending_requests = 0;
};

/// Angular sector of the hexagon between two guider rays, counter-clockwise
/// from `angle_begin` over `angle_span`.
struct Zone {
  std::size_t id = 0;
  Polygon polygon;
  double angle_begin = 0.0;
  double angle_span = kTwoPi;
  std::vector<std::size_t> users;
  std::int64_t request_count = 0;
  std::vector<bool> drops;

  double angle_end() const { return angle_begin + angle_span; }
  bool contains_angle(double theta) const;
};

/// Piecewise-constant demand density over [0, 2π) in equal-width bins.
class AngularDemand {
 public:
  explicit AngularDemand(std::vector<double> bins);
  static AngularDemand uniform(std::size_t bins = 360);

  std::size_t bin_count() const { return bins_.size(); }
  double bin_width() const { return kTwoPi / static_cast<double>(bins_.size()); }
  std::span<const double> bins() const { return bins_; }
  double total() const;

  /// Weight on [a, b) with b - a in [0, 2π]; a may be any angle.
  double mass(double a, double b) const;
  /// First moment of angle over [a, b), measured in the unwrapped frame of a.
  double moment(double a, double b) const;
  /// Weighted angular centroid of [a, b) in the unwrapped frame of a; the
  /// midpoint when the interval carries no weight.
  double centroid(double a, double b) const;

 private:
  std::vector<double> bins_;
};

/// Flat-topped regular hexagon, vertices counter-clockwise from angle 0.
Polygon build_hex_cell(Point2 center, double radius);

double hex_area(double radius);

/// Where the ray from the hexagon center at `theta` leaves the hexagon.
Point2 hex_boundary_point(Point2 center, double radius, double theta);

inline constexpr int kStandardGuiderLines = 6;

/// Splits the hexagon into `k` angular zones. k >= 6 starts from the six
/// standard guider lines through the vertices; smaller k starts from the
/// single line at angle 0. Each further line goes at the demand-weighted
/// angular centroid of the hottest zone, strictly inside it.
std::vector<Zone> partition_zones(Point2 center, double radius, const AngularDemand& demand,
                                  int k, int max_zones = 12);

/// Index of the zone holding `p`, or npos when outside every zone.
std::size_t find_zone(std::span<const Zone> zones, Point2 center, Point2 p);

inline constexpr std::size_t kNoZone = static_cast<std::size_t>(-1);

std::int64_t min_uav_count(std::int64_t total_requests, std::int64_t per_uav_capacity);

/// Weighted-uniform placement: each user picks a zone with probability
/// proportional to `zone_weights`, then a uniform point inside it.
std::vector<UserEquipment> place_users(Point2 center, double radius, std::span<const Zone> zones,
                                       std::span<const double> zone_weights, std::size_t count,
                                       std::uint64_t seed);

/// Fills Zone::users from user positions.
void attach_users(std::vector<Zone>& zones, Point2 center, std::span<const UserEquipment> users);

}  // namespace uavhet
