#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "core/rng.hpp"

namespace uavhet {

struct Scenario;
struct Zone;

enum class QueueModel { kMM1 };

struct TrafficParams {
  double arrival_rate_pps = 0.0;  // γ, packets/s per transmitting user
  double packet_bits = 8192.0;    // 1/μ
  double processing_delay_s = 0.002;
  double propagation_speed_mps = 3e8;
  QueueModel queue_model = QueueModel::kMM1;

  double offered_bps() const { return arrival_rate_pps * packet_bits; }

  static TrafficParams from(const Scenario& s);
};

inline constexpr double kOverload = std::numeric_limits<double>::infinity();

struct UserLoad {
  double value = 0.0;  // γ / (W·log2(1+SINR)·μ)
  bool overloaded = false;
};

/// Utilization of the full link. Non-positive SINR yields an infinite load.
UserLoad user_load(double sinr, double offered_bps, double bandwidth_hz);

/// Sum of point loads over the users of one zone.
double area_load(std::span<const double> per_user_loads);

/// M/M/1 waiting time ρ/(μ_s(1-ρ)); kOverload when ρ >= 1.
double queue_delay(double utilization, double service_rate_pps);

struct DelayBreakdown {
  double transmission = 0.0;
  double propagation = 0.0;
  double queue = 0.0;
  double processing = 0.0;
  double total = 0.0;

  bool overloaded() const { return !std::isfinite(total); }

  static DelayBreakdown of(double transmission, double propagation, double queue,
                           double processing) {
    return {transmission, propagation, queue, processing,
            transmission + propagation + queue + processing};
  }
};

/// Transmission term is the user load itself; queue term is the caller's
/// M/M/1 result for the user's round-robin share.
DelayBreakdown total_delay(double link_distance_m, double load, double queue_s,
                           const TrafficParams& params);

struct RequestEvent {
  std::size_t user = 0;
  std::uint32_t count = 0;
};

/// Poisson(rate·dt) requests per listed user; users drawing zero are omitted.
std::vector<RequestEvent> generate_requests(std::span<const std::size_t> users,
                                            std::span<const double> rate_by_user, double dt,
                                            Rng& rng);

std::vector<RequestEvent> generate_requests(const Zone& zone, double rate, double dt, Rng& rng);

}  // namespace uavhet
