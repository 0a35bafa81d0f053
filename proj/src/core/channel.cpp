#include "core/channel.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/scenario.hpp"

namespace uavhet {

ChannelParams ChannelParams::from_db(double tx_power_dbm, double geom_const_db, double pathloss_exp,
                                     double noise_psd_dbm_hz, double bandwidth_hz,
                                     double los_min_elevation_deg) {
  ChannelParams p;
  p.tx_power_w = dbm_to_watts(tx_power_dbm);
  p.geom_const = db_to_linear(geom_const_db);
  p.pathloss_exp = pathloss_exp;
  p.noise_psd_w_hz = dbm_to_watts(noise_psd_dbm_hz);
  p.bandwidth_hz = bandwidth_hz;
  p.los_min_elevation_rad = los_min_elevation_deg * std::numbers::pi / 180.0;
  require(p.pathloss_exp >= 2.0 && p.tx_power_w > 0.0 && p.bandwidth_hz > 0.0 && p.geom_const > 0.0,
          ErrorCode::kInvalidArgument, "channel parameters out of range");
  return p;
}

ChannelParams uav_channel(const Scenario& s) {
  return ChannelParams::from_db(s.uav_power_dbm, s.tx_const_db, s.pathloss_exp, s.noise_psd_dbm_hz,
                                s.bandwidth_hz, s.los_min_elevation_deg);
}

ChannelParams mbs_channel(const Scenario& s) {
  return ChannelParams::from_db(s.mbs_power_dbm, s.tx_const_db, s.pathloss_exp, s.noise_psd_dbm_hz,
                                s.bandwidth_hz, s.los_min_elevation_deg);
}

LinkGeometry LinkGeometry::between(Point3 tx, Point2 ue) {
  LinkGeometry g;
  g.tx = tx;
  g.ue = ue;
  g.distance = uavhet::distance(tx, ue);
  g.elevation = std::atan2(tx.z, uavhet::distance(tx.ground(), ue));
  return g;
}

bool los_available(const LinkGeometry& link, const ChannelParams& params) {
  return link.elevation >= params.los_min_elevation_rad;
}

double rx_power(double distance, const ChannelParams& params) {
  const double r = std::max(distance, kMinLinkDistance);
  return params.tx_power_w * params.geom_const / std::pow(r, params.pathloss_exp);
}

double interference_power(Point2 ue, std::size_t serving, std::span<const Point3> transmitters,
                          const ChannelParams& params) {
  double acc = 0.0;
  for (std::size_t j = 0; j < transmitters.size(); ++j) {
    if (j == serving) continue;
    acc += rx_power(distance(transmitters[j], ue), params);
  }
  return acc;
}

double sinr(Point2 ue, std::size_t serving, std::span<const Point3> transmitters,
            const ChannelParams& params) {
  require(serving < transmitters.size(), ErrorCode::kInvalidArgument,
          "serving transmitter index out of range");
  const double signal = rx_power(distance(transmitters[serving], ue), params);
  return signal / (interference_power(ue, serving, transmitters, params) + params.noise_power_w());
}

SpectralEfficiency spectral_efficiency(double sinr, double bandwidth_hz, std::size_t shared_users) {
  require(shared_users >= 1, ErrorCode::kInvalidArgument, "round-robin share needs >= 1 user");
  const double se = std::log2(1.0 + sinr) / static_cast<double>(shared_users);
  return {bandwidth_hz * se, se};
}

}  // namespace uavhet
