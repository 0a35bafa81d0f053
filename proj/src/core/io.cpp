#include "core/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/svg.hpp"

namespace uavhet {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kStepsHeader =
    "replication,cell,step,user,served_by,server_id,requests,dropped_requests,sinr,se,rate,load,"
    "transmission,propagation,queue,processing,total,overloaded,dropped";
constexpr std::size_t kStepsColumns = 19;

template <typename T>
T parse_int(std::string_view text) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::kIo, "malformed integer '" + std::string(text) + "' in CSV");
  }
  return v;
}

bool parse_flag(std::string_view text) {
  if (text == "1") return true;
  if (text == "0") return false;
  fail(ErrorCode::kIo, "malformed flag '" + std::string(text) + "' in CSV");
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

StepRecord parse_step(std::string_view line) {
  const auto f = split(line, ',');
  if (f.size() != kStepsColumns) {
    fail(ErrorCode::kIo, "steps.csv row has " + std::to_string(f.size()) + " columns, expected " +
                             std::to_string(kStepsColumns));
  }
  StepRecord r;
  r.replication = parse_int<std::uint32_t>(f[0]);
  r.cell = parse_int<std::uint32_t>(f[1]);
  r.step = parse_int<std::uint32_t>(f[2]);
  r.user = parse_int<std::uint32_t>(f[3]);
  r.served_by = parse_server(f[4]);
  r.server_id = parse_int<std::int32_t>(f[5]);
  r.requests = parse_int<std::uint32_t>(f[6]);
  r.dropped_requests = parse_int<std::uint32_t>(f[7]);
  r.sinr = parse_double(f[8]);
  r.se = parse_double(f[9]);
  r.rate = parse_double(f[10]);
  r.load = parse_double(f[11]);
  r.delay.transmission = parse_double(f[12]);
  r.delay.propagation = parse_double(f[13]);
  r.delay.queue = parse_double(f[14]);
  r.delay.processing = parse_double(f[15]);
  r.delay.total = parse_double(f[16]);
  r.overloaded = parse_flag(f[17]);
  r.dropped = parse_flag(f[18]);
  return r;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  return out;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    fail(ErrorCode::kIo, "cannot create directory '" + dir.string() + "'");
  }
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json mean_std_json(const MeanStd& m) {
  return {{"mean", number_or_null(m.mean)}, {"std", number_or_null(m.std)}};
}

json replication_entry(const ReplicationResult& r) {
  json e = {{"replication", r.replication}, {"seed", r.seed}};
  if (r.error) {
    e["error"] = *r.error;
    return e;
  }
  e["metrics"] = metrics_to_json(r.metrics);
  json trace = json::array();
  for (double c : r.metrics.cost_trace) trace.push_back(number_or_null(c));
  e["cost_trace"] = trace;
  return e;
}

void write_metrics_files(const RunResult& result, const fs::path& dir) {
  write_text(dir / "metrics.json", dump_json(metrics_document(result)));
  write_text(dir / "assignment.json", dump_json(assignment_document(result)));
  std::vector<EpochTrace> epochs;
  for (const auto& r : result.replications) epochs.insert(epochs.end(), r.epochs.begin(), r.epochs.end());
  auto costs = open_out(dir / "costs.csv");
  write_costs_csv(costs, epochs);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) fail(ErrorCode::kInternal, "cannot format double");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::kIo, "malformed number '" + std::string(text) + "'");
  }
  return v;
}

void write_steps_csv(std::ostream& out, std::span<const StepRecord> records) {
  out << kStepsHeader << '\n';
  for (const auto& r : records) {
    out << r.replication << ',' << r.cell << ',' << r.step << ',' << r.user << ','
        << server_name(r.served_by) << ',' << r.server_id << ',' << r.requests << ','
        << r.dropped_requests << ',' << format_double(r.sinr) << ',' << format_double(r.se) << ','
        << format_double(r.rate) << ',' << format_double(r.load) << ','
        << format_double(r.delay.transmission) << ',' << format_double(r.delay.propagation) << ','
        << format_double(r.delay.queue) << ',' << format_double(r.delay.processing) << ','
        << format_double(r.delay.total) << ',' << (r.overloaded ? 1 : 0) << ','
        << (r.dropped ? 1 : 0) << '\n';
  }
}

std::vector<StepRecord> read_steps_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kStepsHeader) {
    fail(ErrorCode::kIo, "steps.csv header does not match");
  }
  std::vector<StepRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_step(line));
  }
  return out;
}

std::vector<StepRecord> read_steps_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  return read_steps_csv(in);
}

void write_costs_csv(std::ostream& out, std::span<const EpochTrace> epochs) {
  out << "kind,replication,cell,epoch,id,zone,users,requests,area_load,density,cost,uavs_assigned,"
         "mean_distance_m,los,admission_ok,admission_lhs,admission_rhs\n";
  for (const auto& e : epochs) {
    const std::string prefix = std::to_string(e.replication) + ',' + std::to_string(e.cell) + ',' +
                               std::to_string(e.epoch) + ',';
    for (const auto& z : e.costs.zones) {
      out << "zone," << prefix << z.zone << ',' << z.zone << ',' << z.users << ',' << z.requests << ','
          << format_double(z.area_load) << ',' << format_double(z.df_area) << ','
          << format_double(z.cf_area) << ',' << z.uavs_assigned << ",,," << (z.admission.ok ? 1 : 0)
          << ',' << format_double(z.admission.lhs) << ',' << format_double(z.admission.rhs) << '\n';
    }
    for (const auto& u : e.costs.uavs) {
      out << "uav," << prefix << u.uav << ',' << (u.zone ? std::to_string(*u.zone) : std::string())
          << ",,,," << format_double(u.df_uav) << ',' << format_double(u.cf_uav) << ",,"
          << format_double(u.mean_distance_m) << ',' << (u.los ? 1 : 0) << ",,,\n";
    }
    out << "overall," << prefix << ",,,,," << format_double(e.costs.df_uav) << ','
        << format_double(e.costs.cf_overall) << ",,,," << (e.costs.constraint_ok ? 1 : 0) << ",,\n";
  }
}

json metrics_to_json(const MetricsReport& m) {
  return {{"records", m.records},
          {"served", m.served},
          {"dropped", m.dropped},
          {"uav_served", m.uav_served},
          {"mean_delay_s", number_or_null(m.mean_delay)},
          {"delay_violation_fraction", number_or_null(m.delay_violations)},
          {"p5_se", number_or_null(m.p5_se)},
          {"median_se", number_or_null(m.median_se)},
          {"throughput_coverage", number_or_null(m.throughput_coverage)},
          {"p_guaranteed_sinr", number_or_null(m.p_guaranteed_sinr)},
          {"drop_fraction", number_or_null(m.drop_fraction)}};
}

json summary_to_json(const MetricsSummary& s) {
  return {{"replications", s.replications},
          {"mean_delay_s", mean_std_json(s.mean_delay)},
          {"delay_violation_fraction", mean_std_json(s.delay_violations)},
          {"p5_se", mean_std_json(s.p5_se)},
          {"median_se", mean_std_json(s.median_se)},
          {"throughput_coverage", mean_std_json(s.throughput_coverage)},
          {"p_guaranteed_sinr", mean_std_json(s.p_guaranteed_sinr)},
          {"drop_fraction", mean_std_json(s.drop_fraction)}};
}

json metrics_document(const RunResult& result) {
  json reps = json::array();
  for (const auto& r : result.replications) reps.push_back(replication_entry(r));
  return {{"config", config_to_json(result.config)},
          {"per_replication", reps},
          {"aggregate", summary_to_json(summarize(result.replications))}};
}

json assignment_document(const RunResult& result) {
  json epochs = json::array();
  for (const auto& rep : result.replications) {
    for (const auto& e : rep.epochs) {
      json pairs = json::array();
      for (const auto& [u, z] : e.assignment.pairs) pairs.push_back({{"uav", u}, {"zone", z}});
      json history = json::array();
      for (double c : e.assignment.history) history.push_back(number_or_null(c));
      json positions = json::array();
      for (const auto& p : e.uav_positions) positions.push_back({p.x, p.y, p.z});
      epochs.push_back({{"replication", e.replication},
                        {"cell", e.cell},
                        {"epoch", e.epoch},
                        {"expected_requests", e.expected_requests},
                        {"min_uav_count", e.min_uav_count},
                        {"pairs", pairs},
                        {"iterations", e.assignment.iterations},
                        {"passes", e.assignment.passes},
                        {"converged", e.assignment.converged},
                        {"final_cost", number_or_null(e.assignment.final_cost)},
                        {"history", history},
                        {"uav_positions_m", positions},
                        {"overall_cost", number_or_null(e.costs.cf_overall)},
                        {"unserved_zones", e.costs.unserved_zones},
                        {"constraint_ok", e.costs.constraint_ok}});
    }
  }
  return {{"uavs_enabled", result.config.scenario.uavs_enabled}, {"epochs", epochs}};
}

void write_run(const RunResult& result, const fs::path& dir) {
  ensure_dir(dir);
  {
    auto steps = open_out(dir / "steps.csv");
    steps << kStepsHeader << '\n';
    for (const auto& r : result.replications) {
      std::ostringstream body;
      write_steps_csv(body, r.records);
      const std::string text = body.str();
      steps << std::string_view(text).substr(text.find('\n') + 1);
    }
  }
  write_metrics_files(result, dir);
}

RunResult run_to_directory(const ExperimentConfig& cfg, const fs::path& dir) {
  validate(cfg);
  ensure_dir(dir);
  RunResult result;
  result.config = cfg;
  const std::uint32_t total = cfg.plan.replications;
  result.replications.resize(total);
  const unsigned batch = std::max(1u, std::thread::hardware_concurrency());

  auto steps = open_out(dir / "steps.csv");
  steps << kStepsHeader << '\n';
  for (std::uint32_t start = 0; start < total; start += batch) {
    const std::uint32_t end = std::min(total, start + batch);
    parallel_for(end - start, [&](std::size_t i) {
      const auto r = static_cast<std::uint32_t>(start + i);
      try {
        result.replications[r] = run_replication(cfg.scenario, cfg.plan, r, true);
      } catch (const std::exception& e) {
        ReplicationResult failed;
        failed.replication = r;
        failed.seed = replication_seed(cfg.scenario.seed, r);
        failed.error = e.what();
        result.replications[r] = std::move(failed);
      }
    });
    for (std::uint32_t r = start; r < end; ++r) {
      auto& rep = result.replications[r];
      std::ostringstream body;
      write_steps_csv(body, rep.records);
      const std::string text = body.str();
      steps << std::string_view(text).substr(text.find('\n') + 1);
      rep.records.clear();
      rep.records.shrink_to_fit();
    }
  }
  steps.close();
  if (!steps) fail(ErrorCode::kIo, "failed writing steps.csv");
  write_metrics_files(result, dir);
  return result;
}

json report_from_records(std::span<const StepRecord> records, const Thresholds& thresholds) {
  std::vector<ReplicationResult> reps;
  std::size_t begin = 0;
  while (begin < records.size()) {
    std::size_t end = begin;
    while (end < records.size() && records[end].replication == records[begin].replication) ++end;
    ReplicationResult r;
    r.replication = records[begin].replication;
    r.metrics = compute_metrics(records.subspan(begin, end - begin), thresholds);
    reps.push_back(std::move(r));
    begin = end;
  }
  json per = json::array();
  for (const auto& r : reps) {
    per.push_back({{"replication", r.replication}, {"metrics", metrics_to_json(r.metrics)}});
  }
  return {{"per_replication", per}, {"aggregate", summary_to_json(summarize(reps))}};
}

json report_from_csv(const fs::path& steps_csv, const Thresholds& thresholds) {
  std::ifstream in(steps_csv, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + steps_csv.string() + "'");
  std::string line;
  if (!std::getline(in, line) || line != kStepsHeader) {
    fail(ErrorCode::kIo, "steps.csv header does not match");
  }
  std::vector<ReplicationResult> reps;
  std::vector<StepRecord> current;
  auto flush = [&] {
    if (current.empty()) return;
    ReplicationResult r;
    r.replication = current.front().replication;
    r.metrics = compute_metrics(current, thresholds);
    reps.push_back(std::move(r));
    current.clear();
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    StepRecord rec = parse_step(line);
    if (!current.empty() && rec.replication != current.front().replication) flush();
    current.push_back(rec);
  }
  flush();
  json per = json::array();
  for (const auto& r : reps) {
    per.push_back({{"replication", r.replication}, {"metrics", metrics_to_json(r.metrics)}});
  }
  return {{"per_replication", per}, {"aggregate", summary_to_json(summarize(reps))}};
}

json compare(const ExperimentConfig& cfg, const fs::path& dir) {
  validate(cfg);
  ensure_dir(dir);
  ExperimentConfig uav_cfg = cfg;
  uav_cfg.scenario.uavs_enabled = true;
  ExperimentConfig base_cfg = cfg;
  base_cfg.scenario.uavs_enabled = false;
  const RunResult uav = run_to_directory(uav_cfg, dir / "uav");
  const RunResult base = run_to_directory(base_cfg, dir / "baseline");

  json seeds = json::array();
  std::size_t delay_wins = 0, se_wins = 0, paired = 0;
  for (std::size_t i = 0; i < uav.replications.size(); ++i) {
    const auto& u = uav.replications[i];
    const auto& b = base.replications[i];
    json e = {{"replication", u.replication}, {"seed", u.seed}};
    if (u.error || b.error) {
      e["error"] = u.error ? *u.error : *b.error;
      seeds.push_back(e);
      continue;
    }
    ++paired;
    const bool dw = u.metrics.mean_delay < b.metrics.mean_delay;
    const bool sw = u.metrics.p5_se > b.metrics.p5_se;
    delay_wins += dw;
    se_wins += sw;
    e["uav"] = metrics_to_json(u.metrics);
    e["baseline"] = metrics_to_json(b.metrics);
    e["delay_win"] = dw;
    e["p5_se_win"] = sw;
    seeds.push_back(e);
  }
  const MetricsSummary us = summarize(uav.replications);
  const MetricsSummary bs = summarize(base.replications);
  auto rel = [](double treat, double ref) {
    return ref != 0.0 && std::isfinite(ref) && std::isfinite(treat) ? json((treat - ref) / ref)
                                                                       : json(nullptr);
  };
  json out = {{"replications", uav.replications.size()},
              {"paired", paired},
              {"delay_wins", delay_wins},
              {"p5_se_wins", se_wins},
              {"per_seed", seeds},
              {"uav", summary_to_json(us)},
              {"baseline", summary_to_json(bs)},
              {"relative",
               {{"mean_delay_change", rel(us.mean_delay.mean, bs.mean_delay.mean)},
                {"p5_se_change", rel(us.p5_se.mean, bs.p5_se.mean)},
                {"throughput_coverage_change",
                 rel(us.throughput_coverage.mean, bs.throughput_coverage.mean)},
                {"p_guaranteed_sinr_change", rel(us.p_guaranteed_sinr.mean, bs.p_guaranteed_sinr.mean)}}}};
  write_text(dir / "compare.json", dump_json(out));
  return out;
}

std::vector<GridPoint> parse_grid(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kConfig, std::string("grid is not valid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) fail(ErrorCode::kConfig, "grid must be a non-empty JSON array");
  const auto keys = config_keys();
  std::vector<GridPoint> grid;
  for (const auto& item : doc) {
    if (!item.is_object()) fail(ErrorCode::kConfig, "grid entries must be JSON objects");
    GridPoint p;
    for (const auto& [k, v] : item.items()) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
        fail(ErrorCode::kConfig, "unknown grid key '" + k + "'");
      }
      if (!v.is_number()) fail(ErrorCode::kConfig, "grid value for '" + k + "' must be a number");
      p.emplace_back(k, v.get<double>());
    }
    grid.push_back(std::move(p));
  }
  return grid;
}

namespace {

std::optional<double> coordinate(const GridPoint& p, std::string_view key) {
  for (const auto& [k, v] : p) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string axis_value(double v) {
  std::string s = format_double(v);
  return s;
}

double pick(const MetricsSummary& s, const std::string& metric) {
  if (metric == "mean_delay") return s.mean_delay.mean;
  if (metric == "throughput_coverage") return s.throughput_coverage.mean;
  if (metric == "p5_se") return s.p5_se.mean;
  if (metric == "p_guaranteed_sinr") return s.p_guaranteed_sinr.mean;
  fail(ErrorCode::kInternal, "unknown plot metric " + metric);
}

/// One series per altitude for UAV rows; the baseline does not depend on
/// altitude and gets a single series.
PlotSpec family_plot(std::span<const SweepRow> rows, const std::string& axis,
                     const std::string& metric, PlotSpec spec) {
  std::map<double, Series> uav;
  Series base{"MBS only", {}};
  std::map<double, bool> base_seen;
  for (const auto& row : rows) {
    const auto x = coordinate(row.point, axis);
    if (!x || !row.summary) continue;
    const double y = pick(*row.summary, metric);
    if (axis == "extra_users" && coordinate(row.point, "pathloss_exp")) continue;
    if (axis == "pathloss_exp" && coordinate(row.point, "extra_users")) continue;
    if (row.uavs_enabled) {
      const auto alt = coordinate(row.point, "altitude_max_ft");
      const double key = alt.value_or(std::numeric_limits<double>::quiet_NaN());
      auto& s = uav[alt ? key : -1.0];
      if (s.name.empty()) s.name = alt ? "UAV " + axis_value(key) + " ft" : "UAV";
      s.points.emplace_back(*x, y);
    } else if (!base_seen[*x]) {
      base_seen[*x] = true;
      base.points.emplace_back(*x, y);
    }
  }
  for (auto& [k, s] : uav) spec.series.push_back(std::move(s));
  if (!base.points.empty()) spec.series.push_back(std::move(base));
  return spec;
}

}  // namespace

json write_sweep(const ExperimentConfig& cfg, std::span<const SweepRow> rows, const fs::path& dir) {
  ensure_dir(dir);
  json out_rows = json::array();
  std::vector<std::string> axes;
  for (const auto& row : rows) {
    for (const auto& [k, v] : row.point) {
      if (std::find(axes.begin(), axes.end(), k) == axes.end()) axes.push_back(k);
    }
  }
  auto csv = open_out(dir / "sweep.csv");
  for (const auto& a : axes) csv << a << ',';
  csv << "uavs_enabled,replications,mean_delay_s,mean_delay_std,delay_violation_fraction,p5_se,"
         "p5_se_std,median_se,throughput_coverage,throughput_coverage_std,p_guaranteed_sinr,"
         "drop_fraction,error\n";
  for (const auto& row : rows) {
    json point = json::object();
    for (const auto& [k, v] : row.point) point[k] = v;
    json r = {{"point", point}, {"uavs_enabled", row.uavs_enabled}};
    for (const auto& a : axes) {
      const auto v = coordinate(row.point, a);
      csv << (v ? format_double(*v) : std::string()) << ',';
    }
    csv << (row.uavs_enabled ? 1 : 0) << ',';
    if (row.summary) {
      const auto& s = *row.summary;
      r["summary"] = summary_to_json(s);
      csv << s.replications << ',' << format_double(s.mean_delay.mean) << ','
          << format_double(s.mean_delay.std) << ',' << format_double(s.delay_violations.mean) << ','
          << format_double(s.p5_se.mean) << ',' << format_double(s.p5_se.std) << ','
          << format_double(s.median_se.mean) << ',' << format_double(s.throughput_coverage.mean) << ','
          << format_double(s.throughput_coverage.std) << ','
          << format_double(s.p_guaranteed_sinr.mean) << ',' << format_double(s.drop_fraction.mean)
          << ",\n";
    } else {
      r["error"] = row.error.value_or("unknown failure");
      csv << ",,,,,,,,,,,\"" << row.error.value_or("") << "\"\n";
    }
    out_rows.push_back(r);
  }

  struct PlotDef {
    const char* file;
    const char* axis;
    const char* metric;
    const char* title;
    const char* x_label;
    const char* y_label;
  };
  const PlotDef defs[] = {
      {"delay_vs_extra_users.svg", "extra_users", "mean_delay", "Network delay vs extra users",
       "Extra users", "Mean delay (s)"},
      {"coverage_vs_pathloss.svg", "pathloss_exp", "throughput_coverage",
       "Throughput coverage vs path-loss exponent", "Path-loss exponent", "Throughput coverage"},
      {"coverage_vs_extra_users.svg", "extra_users", "throughput_coverage",
       "Throughput coverage vs extra users", "Extra users", "Throughput coverage"},
      {"p5se_vs_extra_users.svg", "extra_users", "p5_se", "5th percentile SE vs extra users",
       "Extra users", "5th percentile SE (bits/s/Hz)"},
      {"p5se_vs_pathloss.svg", "pathloss_exp", "p5_se", "5th percentile SE vs path-loss exponent",
       "Path-loss exponent", "5th percentile SE (bits/s/Hz)"},
      {"guaranteed_sinr_vs_extra_users.svg", "extra_users", "p_guaranteed_sinr",
       "Guaranteed-SINR probability vs extra users", "Extra users", "P(SINR >= threshold)"},
  };
  json plots = json::array();
  for (const auto& d : defs) {
    PlotSpec spec = family_plot(rows, d.axis, d.metric, {d.title, d.x_label, d.y_label, {}});
    if (spec.series.empty()) continue;
    write_text(dir / d.file, render_line_plot(spec));
    plots.push_back(d.file);
  }
  json doc = {{"config", config_to_json(cfg)}, {"rows", out_rows}, {"plots", plots}};
  write_text(dir / "sweep.json", dump_json(doc));
  return doc;
}

void write_text(const fs::path& path, std::string_view text) {
  auto out = open_out(path);
  out << text;
  out.close();
  if (!out) fail(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace uavhet
