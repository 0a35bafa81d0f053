// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "core/channel.hpp"
#include "core/cost.hpp"
#include "core/io.hpp"
#include "core/mapper.hpp"
#include "core/runner.hpp"
#include "core/traffic.hpp"
#include "matrix_problem.hpp"
#include "oracles.hpp"

using namespace uavhet;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& name, const std::string& detail) {
  std::printf("criterion %d %s: %s (%s)\n", id, ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

void directional() {
  const auto start = std::chrono::steady_clock::now();
  Scenario s;
  RunPlan plan;
  plan.replications = 20;
  const RunResult uav = run(s, plan, false);
  s.uavs_enabled = false;
  const RunResult base = run(s, plan, false);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  int delay_wins = 0, se_wins = 0;
  bool ok = uav.ok() && base.ok();
  for (std::size_t i = 0; ok && i < uav.replications.size(); ++i) {
    const auto& u = uav.replications[i].metrics;
    const auto& b = base.replications[i].metrics;
    delay_wins += u.mean_delay < b.mean_delay;
    se_wins += u.p5_se > b.p5_se;
  }
  ok = ok && delay_wins >= 18 && se_wins >= 18 && secs < 120.0;
  const auto us = summarize(uav.replications);
  const auto bs = summarize(base.replications);
  verdict(1, ok, "UAV tier beats macro-only baseline on paired seeds",
          "delay wins " + std::to_string(delay_wins) + "/20, p5 SE wins " + std::to_string(se_wins) +
              "/20, mean delay " + fmt("%.4g", us.mean_delay.mean) + " vs " +
              fmt("%.4g s", bs.mean_delay.mean) + ", p5 SE " + fmt("%.4g", us.p5_se.mean) + " vs " +
              fmt("%.4g", bs.p5_se.mean) + ", " + fmt("%.1f s", secs));
}

void poisson_oracle() {
  double worst = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double lambda = i / 10.0;
    for (std::int64_t k = 0; k <= 60; ++k) {
      worst = std::max(worst, rel_err(density_area(lambda, 1.0, k), oracle::poisson_pmf(lambda, k)));
      const double per_uav = (6.0 * lambda) / 6.0;
      worst = std::max(worst, rel_err(density_uav(6.0 * lambda, 6, k), oracle::poisson_pmf(per_uav, k)));
    }
  }
  verdict(2, worst <= 1e-12, "area and UAV densities match 100-digit Poisson oracle",
          fmt("worst relative error %.3g", worst));
}

void average_identity() {
  double worst = 0.0;
  for (std::int64_t k = 0; k <= 50; ++k) {
    worst = std::max(worst, rel_err(density_area(1200, 1200, k), density_area_average(k)));
    worst = std::max(worst, rel_err(density_area_average(k), oracle::poisson_at_one(k)));
  }
  verdict(3, worst <= 1e-12, "density at full occupancy equals 1/(e k!)",
          fmt("worst relative error %.3g", worst));
}

void sinr_closed_form() {
  const Scenario s;
  const auto p = uav_channel(s);
  const std::vector<Point3> tx{{0, 0, 300}};
  const double got = linear_to_db(sinr({400, 0}, 0, tx, p));
  const double want = oracle::snr_db(s.uav_power_dbm, s.tx_const_db, s.pathloss_exp, 500.0,
                                     s.noise_psd_dbm_hz, s.bandwidth_hz);
  verdict(4, std::abs(got - want) <= 0.01, "single-UAV SINR at 500 m matches dB budget",
          fmt("%.4f dB", got) + " vs " + fmt("%.4f dB", want));
}

void mapper_oracle() {
  std::mt19937_64 rng(2024);
  int below_mean = 0, greedy_ok = 0;
  for (int t = 0; t < 100; ++t) {
    auto prob = testing_support::random_problem(rng, 3, 3);
    const auto hand = oracle::hand_greedy(prob.uav, prob.area);
    const auto greedy = greedy_assign(prob.uav, rank_zones(prob.area));
    bool same = true;
    for (std::size_t u = 0; u < 3; ++u) same = same && greedy.zone_of(u) == hand[u];
    greedy_ok += same;

    Rng mr(static_cast<std::uint64_t>(t));
    const auto a = iterate_mapping(prob, MapperOptions{}, mr);
    std::vector<std::vector<double>> scaled = prob.pair;
    for (auto& row : scaled) {
      for (auto& c : row) c /= 3.0;
    }
    const double mean =
        oracle::mean_over_matchings(scaled) + prob.area[0] + prob.area[1] + prob.area[2];
    below_mean += a.final_cost <= mean;
  }
  verdict(5, below_mean == 100 && greedy_ok == 100,
          "mapper at or below mean matching; greedy equals hand rule",
          std::to_string(below_mean) + "/100 at or below mean, " + std::to_string(greedy_ok) +
              "/100 greedy matches");
}

void ordinal_invariance() {
  std::mt19937_64 rng(77);
  int same = 0;
  for (int t = 0; t < 50; ++t) {
    auto prob = testing_support::random_problem(rng, 6, 6);
    std::vector<double> cubed = prob.uav;
    for (auto& c : cubed) c = c * c * c + 1.0;
    const auto ranked = rank_zones(prob.area);
    same += greedy_assign(prob.uav, ranked).pairing(6) == greedy_assign(cubed, ranked).pairing(6);
  }
  verdict(6, same == 50, "x^3+1 on UAV costs leaves greedy pairing unchanged",
          std::to_string(same) + "/50 identical");
}

void delay_accounting(const fs::path& work) {
  ExperimentConfig cfg;
  const fs::path dir = work / "accounting";
  const RunResult res = run_to_directory(cfg, dir);
  const auto records = read_steps_csv(dir / "steps.csv");
  std::size_t bad_sums = 0, violations = 0;
  for (const auto& r : records) {
    if (!(r.delay.total ==
          r.delay.transmission + r.delay.propagation + r.delay.queue + r.delay.processing)) {
      ++bad_sums;
    }
    if (!std::isfinite(r.delay.total) || r.delay.total > cfg.scenario.delay_threshold_s) ++violations;
  }
  const double recount = static_cast<double>(violations) / static_cast<double>(records.size());
  const double online = res.replications.at(0).metrics.delay_violations;
  const bool ok = res.ok() && !records.empty() && bad_sums == 0 && recount == online;
  verdict(7, ok, "delay components sum exactly; CSV recount equals online violation fraction",
          std::to_string(records.size()) + " records, " + std::to_string(bad_sums) +
              " bad sums, recount " + format_double(recount) + " vs " + format_double(online));
}

void determinism(const fs::path& work) {
  ExperimentConfig cfg;
  cfg.plan.replications = 2;
  run_to_directory(cfg, work / "det_a");
  run_to_directory(cfg, work / "det_b");
  const bool metrics = read_text(work / "det_a/metrics.json") == read_text(work / "det_b/metrics.json");
  const bool steps = read_text(work / "det_a/steps.csv") == read_text(work / "det_b/steps.csv");
  verdict(8, metrics && steps, "identical config and seed give byte-identical outputs",
          std::string("metrics.json ") + (metrics ? "identical" : "differs") + ", steps.csv " +
              (steps ? "identical" : "differs"));
}

void monotonicity() {
  const auto p = uav_channel(Scenario{});
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> xy(-2000, 2000), z(60, 153), unit(0, 1);
  std::size_t sinr_breaks = 0, sinr_checks = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<Point3> tx{{xy(rng), xy(rng), z(rng)}};
    const Point2 ue{xy(rng), xy(rng)};
    double prev = sinr(ue, 0, tx, p);
    for (int k = 0; k < 8; ++k) {
      tx.push_back({xy(rng), xy(rng), z(rng)});
      const double next = sinr(ue, 0, tx, p);
      sinr_breaks += next > prev;
      ++sinr_checks;
      prev = next;
    }
  }

  std::size_t load_breaks = 0, load_checks = 0;
  for (int t = 0; t < 200; ++t) {
    std::vector<double> loads;
    double prev = area_load(loads);
    for (int u = 0; u < 100; ++u) {
      const double s = std::pow(10.0, 4.0 * unit(rng) - 1.0);
      loads.push_back(user_load(s, 256000.0, 10e6).value);
      const double next = area_load(loads);
      load_breaks += next < prev;
      ++load_checks;
      prev = next;
    }
  }

  RunPlan plan;
  plan.horizon_steps = 200;
  const auto rep = run_replication(Scenario{}, plan, 0);
  std::vector<double> se;
  for (const auto& r : rep.records) se.push_back(r.se);
  std::size_t cov_breaks = 0, cov_checks = 0;
  double prev = 1.0;
  for (double th = 0.001; th <= 0.5; th += 0.001) {
    const double c = throughput_coverage(se, th);
    cov_breaks += c > prev;
    ++cov_checks;
    prev = c;
  }
  const bool ok = sinr_breaks == 0 && load_breaks == 0 && cov_breaks == 0 && !se.empty();
  verdict(9, ok, "interferers never raise SINR; users never lower L_a; coverage non-increasing",
          std::to_string(sinr_checks) + " SINR, " + std::to_string(load_checks) + " load, " +
              std::to_string(cov_checks) + " threshold checks; " +
              std::to_string(sinr_breaks + load_breaks + cov_breaks) + " violations");
}

template <typename F>
void guarded(int id, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    verdict(id, false, "aborted", e.what());
  }
}

}  // namespace

int main() {
  const fs::path work = fs::temp_directory_path() / "uavhet_acceptance";
  fs::remove_all(work);
  guarded(1, directional);
  guarded(2, poisson_oracle);
  guarded(3, average_identity);
  guarded(4, sinr_closed_form);
  guarded(5, mapper_oracle);
  guarded(6, ordinal_invariance);
  guarded(7, [&] { delay_accounting(work); });
  guarded(8, [&] { determinism(work); });
  guarded(9, monotonicity);
  fs::remove_all(work);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
