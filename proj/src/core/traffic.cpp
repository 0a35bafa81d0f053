#include "core/traffic.hpp"

#include <random>

#include "core/error.hpp"
#include "core/scenario.hpp"

namespace uavhet {

TrafficParams TrafficParams::from(const Scenario& s) {
  TrafficParams p;
  p.packet_bits = s.packet_size_bytes * 8.0;
  p.arrival_rate_pps = s.offered_traffic_bps / p.packet_bits;
  p.processing_delay_s = s.processing_delay_s;
  p.propagation_speed_mps = s.propagation_speed_mps;
  return p;
}

UserLoad user_load(double sinr, double offered_bps, double bandwidth_hz) {
  if (!(sinr > 0.0)) return {kOverload, true};
  const double value = offered_bps / (bandwidth_hz * std::log2(1.0 + sinr));
  return {value, !(value < 1.0)};
}

double area_load(std::span<const double> per_user_loads) {
  double acc = 0.0;
  for (double l : per_user_loads) acc += l;
  return acc;
}

double queue_delay(double utilization, double service_rate_pps) {
  require(utilization >= 0.0 && !std::isnan(utilization), ErrorCode::kInvalidArgument,
          "utilization must be >= 0");
  if (utilization >= 1.0 || !(service_rate_pps > 0.0)) return kOverload;
  return utilization / (service_rate_pps * (1.0 - utilization));
}

DelayBreakdown total_delay(double link_distance_m, double load, double queue_s,
                           const TrafficParams& params) {
  return DelayBreakdown::of(load, link_distance_m / params.propagation_speed_mps, queue_s,
                            params.processing_delay_s);
}

std::vector<RequestEvent> generate_requests(std::span<const std::size_t> users,
                                            std::span<const double> rate_by_user, double dt,
                                            Rng& rng) {
  require(dt > 0.0, ErrorCode::kInvalidArgument, "step duration must be > 0");
  std::vector<RequestEvent> events;
  for (std::size_t u : users) {
    require(u < rate_by_user.size(), ErrorCode::kInvalidArgument, "user id without a rate");
    const double mean = rate_by_user[u] * dt;
    if (!(mean > 0.0)) continue;
    std::poisson_distribution<std::uint32_t> draw(mean);
    const std::uint32_t n = draw(rng);
    if (n > 0) events.push_back({u, n});
  }
  return events;
}

std::vector<RequestEvent> generate_requests(const Zone& zone, double rate, double dt, Rng& rng) {
  require(dt > 0.0, ErrorCode::kInvalidArgument, "step duration must be > 0");
  std::vector<RequestEvent> events;
  const double mean = rate * dt;
  if (!(mean > 0.0)) return events;
  std::poisson_distribution<std::uint32_t> draw(mean);
  for (std::size_t u : zone.users) {
    const std::uint32_t n = draw(rng);
    if (n > 0) events.push_back({u, n});
  }
  return events;
}

}  // namespace uavhet
