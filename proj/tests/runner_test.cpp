#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <gtest/gtest.h>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/io.hpp"
#include "core/runner.hpp"

using namespace uavhet;

namespace {

RunPlan short_plan(std::uint32_t reps = 1) {
  RunPlan p;
  p.horizon_steps = 100;
  p.epoch_steps = 50;
  p.replications = reps;
  return p;
}

std::string as_csv(const std::vector<StepRecord>& records) {
  std::stringstream out;
  write_steps_csv(out, records);
  return out.str();
}

}  // namespace

TEST(Runner, PlanValidation) {
  RunPlan p;
  EXPECT_NO_THROW(validate(p));
  p.epoch_steps = 0;
  EXPECT_THROW(validate(p), Error);
  p = RunPlan{};
  p.horizon_steps = 50;
  EXPECT_THROW(validate(p), Error);
  p = RunPlan{};
  p.replications = 0;
  EXPECT_THROW(validate(p), Error);
}

TEST(Runner, DeterministicForFixedSeed) {
  const Scenario s;
  const auto a = run_replication(s, short_plan(), 0);
  const auto b = run_replication(s, short_plan(), 0);
  ASSERT_EQ(a.records.size(), b.records.size());
  EXPECT_EQ(as_csv(a.records), as_csv(b.records));
  EXPECT_EQ(a.metrics.cost_trace, b.metrics.cost_trace);
}

TEST(Runner, DifferentSeedsDiffer) {
  Scenario s;
  const auto a = run_replication(s, short_plan(), 0);
  s.seed = 2;
  const auto b = run_replication(s, short_plan(), 0);
  EXPECT_NE(as_csv(a.records), as_csv(b.records));
}

TEST(Runner, BaselineServesEveryoneFromMacro) {
  Scenario s;
  s.uavs_enabled = false;
  const auto r = run_replication(s, short_plan(), 0);
  ASSERT_FALSE(r.records.empty());
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.served_by, Server::kMbs);
    EXPECT_EQ(rec.server_id, -1);
  }
  EXPECT_EQ(r.metrics.uav_served, 0u);
  EXPECT_TRUE(r.metrics.cost_trace.empty());
}

TEST(Runner, UavModeServesFromBothTiers) {
  const auto r = run_replication(Scenario{}, short_plan(), 0);
  EXPECT_GT(r.metrics.uav_served, 0u);
  EXPECT_EQ(r.metrics.cost_trace.size(), 2u);
  ASSERT_EQ(r.epochs.size(), 2u);
  for (const auto& e : r.epochs) {
    EXPECT_EQ(e.uav_positions.size(), 6u);
    EXPECT_EQ(e.costs.zones.size(), 6u);
    EXPECT_FALSE(e.assignment.pairs.empty());
    for (const auto& p : e.uav_positions) {
      EXPECT_GE(p.z, feet_to_meters(200) - 1e-9);
      EXPECT_LE(p.z, feet_to_meters(500) + 1e-9);
    }
  }
}

TEST(Runner, ModesShareArrivals) {
  Scenario s;
  const auto uav = run_replication(s, short_plan(), 0);
  s.uavs_enabled = false;
  const auto base = run_replication(s, short_plan(), 0);
  ASSERT_EQ(uav.records.size(), base.records.size());
  for (std::size_t i = 0; i < uav.records.size(); ++i) {
    EXPECT_EQ(uav.records[i].step, base.records[i].step);
    EXPECT_EQ(uav.records[i].user, base.records[i].user);
    EXPECT_EQ(uav.records[i].requests, base.records[i].requests);
  }
}

TEST(Runner, RecordsAreConsistent) {
  const Scenario s;
  const auto r = run_replication(s, short_plan(), 0);
  std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> seen;
  for (const auto& rec : r.records) {
    EXPECT_TRUE(seen.insert({rec.cell, rec.step, rec.user}).second);
    EXPECT_GT(rec.requests, 0u);
    EXPECT_LE(rec.dropped_requests, rec.requests);
    EXPECT_EQ(rec.dropped, rec.dropped_requests > 0);
    EXPECT_EQ(rec.delay.total,
              rec.delay.transmission + rec.delay.propagation + rec.delay.queue + rec.delay.processing);
    EXPECT_EQ(rec.overloaded, !std::isfinite(rec.delay.total));
    if (rec.overloaded || rec.delay.total > s.delay_threshold_s) {
      EXPECT_EQ(rec.dropped_requests, rec.requests);
    }
    EXPECT_FALSE(std::isnan(rec.sinr));
    EXPECT_GT(rec.sinr, 0.0);
  }
}

TEST(Runner, ZeroUsersGiveEmptyMetrics) {
  Scenario s;
  s.active_users = 0;
  const auto r = run_replication(s, short_plan(), 0);
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.metrics.records, 0u);
  EXPECT_TRUE(std::isnan(r.metrics.mean_delay));
}

TEST(Runner, ReplicationOrderDoesNotMatter) {
  const Scenario s;
  const auto all = run(s, short_plan(3), false);
  ASSERT_TRUE(all.ok());
  std::vector<ReplicationResult> reversed;
  for (int r = 2; r >= 0; --r) reversed.push_back(run_replication(s, short_plan(3), r, false));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(all.replications[i].seed, reversed[2 - i].seed);
    EXPECT_EQ(all.replications[i].metrics.mean_delay, reversed[2 - i].metrics.mean_delay);
  }
  std::vector<ReplicationResult> ordered(reversed.rbegin(), reversed.rend());
  const auto a = summarize(all.replications);
  const auto b = summarize(ordered);
  EXPECT_EQ(a.mean_delay.mean, b.mean_delay.mean);
  EXPECT_EQ(a.p5_se.std, b.p5_se.std);
}

TEST(Runner, MultipleCellsEachGetRecords) {
  Scenario s;
  s.mbs_count = 2;
  const auto r = run_replication(s, short_plan(), 0);
  std::set<std::uint32_t> cells;
  for (const auto& rec : r.records) cells.insert(rec.cell);
  EXPECT_EQ(cells, (std::set<std::uint32_t>{0, 1}));
  EXPECT_EQ(r.epochs.size(), 4u);
}

TEST(Runner, InvalidScenarioAbortsBeforeStepping) {
  Scenario s;
  s.eta1 = 2.0;
  EXPECT_THROW(run(s, short_plan()), Error);
}

TEST(Sweep, SingletonGridMatchesRun) {
  ExperimentConfig c;
  c.plan = short_plan();
  const std::vector<GridPoint> grid{{{"extra_users", 0.0}}};
  const auto rows = sweep(c, grid);
  ASSERT_EQ(rows.size(), 2u);
  ASSERT_TRUE(rows[0].summary.has_value());
  const auto direct = run(c.scenario, c.plan, false);
  EXPECT_EQ(rows[0].summary->mean_delay.mean, direct.replications[0].metrics.mean_delay);
  EXPECT_TRUE(rows[0].uavs_enabled);
  EXPECT_FALSE(rows[1].uavs_enabled);
}

TEST(Sweep, FailingPointIsRecordedAndSweepContinues) {
  ExperimentConfig c;
  c.plan = short_plan();
  const std::vector<GridPoint> grid{{{"eta1", 0.1}}, {{"uav_count", 3.0}}};
  const auto rows = sweep(c, grid);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_TRUE(rows[0].error.has_value());
  EXPECT_TRUE(rows[1].error.has_value());
  EXPECT_TRUE(rows[2].summary.has_value());
  EXPECT_TRUE(rows[3].summary.has_value());
}

TEST(Sweep, DefaultGridCoversAltitudeFamiliesAndPathLoss) {
  const auto g = default_grid(Scenario{});
  EXPECT_EQ(g.size(), 3u * 8u + 3u);
  EXPECT_THROW(sweep(ExperimentConfig{}, std::vector<GridPoint>{}), Error);
}

TEST(Seeds, ReplicationSeedsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint32_t r = 0; r < 1000; ++r) EXPECT_TRUE(seen.insert(replication_seed(1, r)).second);
}
