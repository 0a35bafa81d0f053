#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core/runner.hpp"

namespace uavhet {

/// Shortest round-trip text for a double; "inf", "-inf" and "nan" otherwise.
std::string format_double(double v);
double parse_double(std::string_view text);

void write_steps_csv(std::ostream& out, std::span<const StepRecord> records);
std::vector<StepRecord> read_steps_csv(std::istream& in);
std::vector<StepRecord> read_steps_csv(const std::filesystem::path& path);

void write_costs_csv(std::ostream& out, std::span<const EpochTrace> epochs);

nlohmann::json metrics_to_json(const MetricsReport& m);
nlohmann::json summary_to_json(const MetricsSummary& s);
nlohmann::json metrics_document(const RunResult& result);
nlohmann::json assignment_document(const RunResult& result);

/// metrics.json, steps.csv, assignment.json and costs.csv under `dir`.
void write_run(const RunResult& result, const std::filesystem::path& dir);

/// Runs and writes the same files as write_run, streaming step records to
/// disk replication by replication. The returned result holds no records.
RunResult run_to_directory(const ExperimentConfig& cfg, const std::filesystem::path& dir);

/// report_from_records over a steps.csv file, one replication at a time.
nlohmann::json report_from_csv(const std::filesystem::path& steps_csv, const Thresholds& thresholds);

/// Per-replication metrics recomputed from persisted step records, with the
/// same aggregate as the online report.
nlohmann::json report_from_records(std::span<const StepRecord> records, const Thresholds& thresholds);

/// Runs both modes on the same seeds; writes `uav/`, `baseline/` and
/// compare.json under `dir` and returns the comparison.
nlohmann::json compare(const ExperimentConfig& cfg, const std::filesystem::path& dir);

/// Grid from JSON text: an array of flat objects mapping keys to numbers.
std::vector<GridPoint> parse_grid(std::string_view json_text);

/// Writes sweep.json, sweep.csv and the SVG plots under `dir`.
nlohmann::json write_sweep(const ExperimentConfig& cfg, std::span<const SweepRow> rows,
                           const std::filesystem::path& dir);

void write_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

/// Two-space indented, trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace uavhet
