#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "core/traffic.hpp"

namespace uavhet {

enum class Server : std::uint8_t { kNone = 0, kMbs = 1, kUav = 2 };

const char* server_name(Server s);
Server parse_server(std::string_view name);

/// One requesting user in one step.
struct StepRecord {
  std::uint32_t replication = 0;
  std::uint32_t cell = 0;
  std::uint32_t step = 0;
  std::uint32_t user = 0;
  Server served_by = Server::kNone;
  std::int32_t server_id = -1;  // UAV index, -1 otherwise
  std::uint32_t requests = 0;
  std::uint32_t dropped_requests = 0;
  double sinr = 0.0;
  double se = 0.0;    // bits/s/Hz after round-robin sharing
  double rate = 0.0;  // bits/s
  double load = 0.0;  // full-link utilization
  DelayBreakdown delay;
  bool overloaded = false;
  bool dropped = false;

};

struct Thresholds {
  double delay_s = 0.2;
  double sinr = 0.55;
  double se_coverage = 0.03;
};

struct MetricsReport {
  std::size_t records = 0;
  std::size_t served = 0;  // records with a finite delay
  std::size_t dropped = 0;
  std::size_t uav_served = 0;
  double mean_delay = 0.0;
  double delay_violations = 0.0;
  double p5_se = 0.0;
  double median_se = 0.0;
  double throughput_coverage = 0.0;
  double p_guaranteed_sinr = 0.0;
  double drop_fraction = 0.0;
  std::vector<double> cost_trace;
};

/// Nearest-rank: element ceil(p/100·N) (1-based) of the ascending sort.
double percentile(std::span<const double> values, double p);

/// Fraction with SE >= threshold.
double throughput_coverage(std::span<const double> se_values, double threshold);

/// Fraction with SINR >= threshold.
double guaranteed_sinr_probability(std::span<const double> sinr_values, double threshold);

struct DelayStats {
  double mean = 0.0;  // over finite delays; NaN when there are none
  double violation_fraction = 0.0;
};

/// Violations count delays above the threshold and overload sentinels.
DelayStats delay_statistics(std::span<const double> total_delays, double threshold);

MetricsReport compute_metrics(std::span<const StepRecord> records, const Thresholds& thresholds,
                              std::vector<double> cost_trace = {});

}  // namespace uavhet
