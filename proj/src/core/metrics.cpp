#include "core/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "core/error.hpp"

namespace uavhet {

const char* server_name(Server s) {
  switch (s) {
    case Server::kMbs:
      return "mbs";
    case Server::kUav:
      return "uav";
    case Server::kNone:
      break;
  }
  return "none";
}

Server parse_server(std::string_view name) {
  if (name == "mbs") return Server::kMbs;
  if (name == "uav") return Server::kUav;
  if (name == "none") return Server::kNone;
  fail(ErrorCode::kIo, "unknown server kind '" + std::string(name) + "'");
}

double percentile(std::span<const double> values, double p) {
  require(!values.empty(), ErrorCode::kInvalidArgument, "percentile of an empty set");
  require(p > 0.0 && p < 100.0, ErrorCode::kInvalidArgument, "percentile must lie in (0, 100)");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(p * n / 100.0));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

double throughput_coverage(std::span<const double> se_values, double threshold) {
  if (se_values.empty()) return 0.0;
  std::size_t hit = 0;
  for (double v : se_values) {
    if (v >= threshold) ++hit;
  }
  return static_cast<double>(hit) / static_cast<double>(se_values.size());
}

double guaranteed_sinr_probability(std::span<const double> sinr_values, double threshold) {
  if (sinr_values.empty()) return 0.0;
  std::size_t hit = 0;
  for (double v : sinr_values) {
    if (v >= threshold) ++hit;
  }
  return static_cast<double>(hit) / static_cast<double>(sinr_values.size());
}

DelayStats delay_statistics(std::span<const double> total_delays, double threshold) {
  DelayStats out;
  if (total_delays.empty()) {
    out.mean = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  double sum = 0.0;
  std::size_t finite = 0;
  std::size_t violations = 0;
  for (double d : total_delays) {
    if (std::isfinite(d)) {
      sum += d;
      ++finite;
    }
    if (!std::isfinite(d) || d > threshold) ++violations;
  }
  out.mean = finite > 0 ? sum / static_cast<double>(finite) : std::numeric_limits<double>::quiet_NaN();
  out.violation_fraction = static_cast<double>(violations) / static_cast<double>(total_delays.size());
  return out;
}

MetricsReport compute_metrics(std::span<const StepRecord> records, const Thresholds& thresholds,
                              std::vector<double> cost_trace) {
  MetricsReport m;
  m.cost_trace = std::move(cost_trace);
  m.records = records.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (records.empty()) {
    m.mean_delay = nan;
    m.p5_se = nan;
    m.median_se = nan;
    return m;
  }

  std::vector<double> delays, se, sinrs;
  delays.reserve(records.size());
  se.reserve(records.size());
  sinrs.reserve(records.size());
  for (const auto& r : records) {
    delays.push_back(r.delay.total);
    se.push_back(r.se);
    sinrs.push_back(r.sinr);
    if (std::isfinite(r.delay.total)) ++m.served;
    if (r.dropped) ++m.dropped;
    if (r.served_by == Server::kUav) ++m.uav_served;
  }
  const DelayStats ds = delay_statistics(delays, thresholds.delay_s);
  m.mean_delay = ds.mean;
  m.delay_violations = ds.violation_fraction;
  m.p5_se = percentile(se, 5.0);
  m.median_se = percentile(se, 50.0);
  m.throughput_coverage = throughput_coverage(se, thresholds.se_coverage);
  m.p_guaranteed_sinr = guaranteed_sinr_probability(sinrs, thresholds.sinr);
  m.drop_fraction = static_cast<double>(m.dropped) / static_cast<double>(m.records);
  return m;
}

}  // namespace uavhet
