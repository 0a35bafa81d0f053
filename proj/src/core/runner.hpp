#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/cost.hpp"
#include "core/mapper.hpp"
#include "core/metrics.hpp"
#include "core/scenario.hpp"

namespace uavhet {

struct RunPlan {
  std::uint32_t horizon_steps = 1000;
  std::uint32_t epoch_steps = 100;  // steps between re-mappings
  double step_seconds = 1.0;
  std::uint32_t replications = 1;
  MapperOptions mapper;

  friend bool operator==(const RunPlan& a, const RunPlan& b) {
    return a.horizon_steps == b.horizon_steps && a.epoch_steps == b.epoch_steps &&
           a.step_seconds == b.step_seconds && a.replications == b.replications &&
           a.mapper.max_iters == b.mapper.max_iters && a.mapper.tolerance == b.mapper.tolerance &&
           a.mapper.resets == b.mapper.resets;
  }
};

void validate(const RunPlan& plan);

struct ExperimentConfig {
  Scenario scenario;
  RunPlan plan;
};

/// Mapping outcome and costs of one cell for one demand epoch.
struct EpochTrace {
  std::uint32_t replication = 0;
  std::uint32_t cell = 0;
  std::uint32_t epoch = 0;
  std::int64_t expected_requests = 0;  // S_r over the cell for one step
  std::int64_t min_uav_count = 0;
  std::vector<Point3> uav_positions;
  Assignment assignment;
  CostReport costs;
};

struct ReplicationResult {
  std::uint32_t replication = 0;
  std::uint64_t seed = 0;
  MetricsReport metrics;
  std::vector<StepRecord> records;  // empty unless kept
  std::vector<EpochTrace> epochs;
  std::optional<std::string> error;
};

struct RunResult {
  ExperimentConfig config;
  std::vector<ReplicationResult> replications;

  bool ok() const;
};

/// fn(0..n-1) across hardware threads. Each index runs exactly once; the
/// first exception is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

std::uint64_t replication_seed(std::uint64_t base_seed, std::uint32_t replication);

Thresholds thresholds_of(const Scenario& s);

/// One replication, every cell, the full horizon. Throws on numeric faults.
ReplicationResult run_replication(const Scenario& scenario, const RunPlan& plan,
                                  std::uint32_t replication, bool keep_records = true);

/// All replications, in parallel; a failing replication is recorded and the
/// rest still run.
RunResult run(const Scenario& scenario, const RunPlan& plan, bool keep_records = true);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

struct MetricsSummary {
  std::size_t replications = 0;
  MeanStd mean_delay;
  MeanStd delay_violations;
  MeanStd p5_se;
  MeanStd median_se;
  MeanStd throughput_coverage;
  MeanStd p_guaranteed_sinr;
  MeanStd drop_fraction;
};

/// Sample mean and standard deviation over successful replications, in
/// replication order.
MetricsSummary summarize(std::span<const ReplicationResult> reps);

using GridPoint = std::vector<std::pair<std::string, double>>;

struct SweepRow {
  GridPoint point;
  bool uavs_enabled = true;
  std::optional<MetricsSummary> summary;
  std::optional<std::string> error;
};

/// Runs every grid point in both modes. Point failures are recorded and the
/// sweep continues.
std::vector<SweepRow> sweep(const ExperimentConfig& base, std::span<const GridPoint> grid);

/// Extra-users by altitude family plus a path-loss exponent axis.
std::vector<GridPoint> default_grid(const Scenario& s);

}  // namespace uavhet
