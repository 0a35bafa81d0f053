#pragma once

#include <cstddef>
#include <span>

#include "core/geometry.hpp"

namespace uavhet {

struct Scenario;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

/// Link-budget constants in linear SI units.
struct ChannelParams {
  double tx_power_w = 0.0;
  double geom_const = 1.0;  // K
  double pathloss_exp = 4.0;
  double noise_psd_w_hz = 0.0;
  double bandwidth_hz = 1.0;
  double los_min_elevation_rad = 0.0;

  double noise_power_w() const { return noise_psd_w_hz * bandwidth_hz; }

  static ChannelParams from_db(double tx_power_dbm, double geom_const_db, double pathloss_exp,
                               double noise_psd_dbm_hz, double bandwidth_hz,
                               double los_min_elevation_deg);
};

ChannelParams uav_channel(const Scenario& s);
/// Same path-gain law with the macro station's transmit power.
ChannelParams mbs_channel(const Scenario& s);

// Distances below this are clamped to keep the power law finite.
inline constexpr double kMinLinkDistance = 1.0;

struct LinkGeometry {
  Point3 tx;
  Point2 ue;
  double distance = 0.0;
  double elevation = 0.0;  // radians above the UE's horizon

  static LinkGeometry between(Point3 tx, Point2 ue);
};

bool los_available(const LinkGeometry& link, const ChannelParams& params);

/// P·K / R^α with R clamped at kMinLinkDistance.
double rx_power(double distance, const ChannelParams& params);
inline double rx_power(const LinkGeometry& link, const ChannelParams& params) {
  return rx_power(link.distance, params);
}

double interference_power(Point2 ue, std::size_t serving, std::span<const Point3> transmitters,
                          const ChannelParams& params);

/// Every transmitter other than `serving` shares the band and interferes.
double sinr(Point2 ue, std::size_t serving, std::span<const Point3> transmitters,
            const ChannelParams& params);

struct SpectralEfficiency {
  double rate_bps = 0.0;  // N_S
  double se_bps_hz = 0.0;
};

/// Round-robin share of the Shannon rate among `shared_users` users.
SpectralEfficiency spectral_efficiency(double sinr, double bandwidth_hz, std::size_t shared_users);

}  // namespace uavhet
