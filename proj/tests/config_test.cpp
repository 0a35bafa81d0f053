#include <gtest/gtest.h>

#include "core/config.hpp"
#include "core/error.hpp"

using namespace uavhet;

namespace {

ErrorCode code_of(const char* text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST(Config, EmptyObjectGivesDefaults) {
  const auto c = parse_config("{}");
  EXPECT_EQ(c.scenario, Scenario{});
  EXPECT_EQ(c.plan, RunPlan{});
}

TEST(Config, OverridesApply) {
  const auto c = parse_config(R"({"uav_count": 4, "pathloss_exp": 3.0, "uavs_enabled": false,
                                  "horizon_steps": 200, "seed": 18446744073709551615})");
  EXPECT_EQ(c.scenario.uav_count, 4);
  EXPECT_EQ(c.scenario.pathloss_exp, 3.0);
  EXPECT_FALSE(c.scenario.uavs_enabled);
  EXPECT_EQ(c.plan.horizon_steps, 200u);
  EXPECT_EQ(c.scenario.seed, 18446744073709551615ULL);
}

TEST(Config, IntegralFloatsAcceptedForIntegerKeys) {
  EXPECT_EQ(parse_config(R"({"extra_users": 200.0})").scenario.extra_users, 200);
  EXPECT_EQ(code_of(R"({"extra_users": 200.5})"), ErrorCode::kConfig);
}

TEST(Config, RejectsUnknownKeysAndBadTypes) {
  EXPECT_EQ(code_of(R"({"uav_cnt": 4})"), ErrorCode::kConfig);
  EXPECT_EQ(code_of(R"({"uav_count": "four"})"), ErrorCode::kConfig);
  EXPECT_EQ(code_of(R"({"uavs_enabled": 1})"), ErrorCode::kConfig);
  EXPECT_EQ(code_of(R"({"scenario": {"uav_count": 4}})"), ErrorCode::kConfig);
  EXPECT_EQ(code_of(R"([1, 2])"), ErrorCode::kConfig);
  EXPECT_EQ(code_of(R"({"seed": -1})"), ErrorCode::kConfig);
  EXPECT_EQ(code_of("{not json"), ErrorCode::kConfig);
}

TEST(Config, ValidationErrorsSurface) {
  EXPECT_EQ(code_of(R"({"eta1": 0.2})"), ErrorCode::kConfig);
  EXPECT_EQ(code_of(R"({"horizon_steps": 10, "epoch_steps": 20})"), ErrorCode::kConfig);
  EXPECT_EQ(code_of(R"({"replications": 0})"), ErrorCode::kConfig);
}

TEST(Config, JsonRoundTrip) {
  auto c = parse_config(R"({"uav_count": 5, "eta1": 0.75, "mapper_tolerance": 1e-7})");
  const auto back = parse_config(config_to_json(c).dump());
  EXPECT_EQ(back.scenario, c.scenario);
  EXPECT_EQ(back.plan, c.plan);
  EXPECT_EQ(config_to_json(c).size(), config_keys().size());
}

TEST(Config, MissingFileIsIoError) {
  try {
    load_config_file("/nonexistent/config.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}
