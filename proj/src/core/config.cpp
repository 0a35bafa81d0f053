#include "core/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "core/error.hpp"

namespace uavhet {

using nlohmann::json;

namespace {

struct Field {
  std::string key;
  std::function<void(ExperimentConfig&, const json&)> set;
  std::function<json(const ExperimentConfig&)> get;
};

[[noreturn]] void bad_type(const std::string& key, const char* want) {
  fail(ErrorCode::kConfig, "config key '" + key + "' must be " + want);
}

double as_double(const std::string& key, const json& v) {
  if (!v.is_number()) bad_type(key, "a number");
  return v.get<double>();
}

long long as_integer(const std::string& key, const json& v) {
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && std::floor(d) == d && std::abs(d) < 9e15) return static_cast<long long>(d);
  }
  bad_type(key, "an integer");
}

template <typename T, typename Owner>
Field field(std::string key, T Owner::*member, Owner ExperimentConfig::*owner) {
  Field f;
  f.key = key;
  f.set = [key, member, owner](ExperimentConfig& c, const json& v) {
    T& slot = (c.*owner).*member;
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) bad_type(key, "a boolean");
      slot = v.get<bool>();
    } else if constexpr (std::is_same_v<T, std::uint64_t>) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        bad_type(key, "a non-negative integer");
      }
      slot = v.get<std::uint64_t>();
    } else if constexpr (std::is_integral_v<T>) {
      const long long raw = as_integer(key, v);
      if (raw < static_cast<long long>(std::numeric_limits<T>::min()) ||
          raw > static_cast<long long>(std::numeric_limits<T>::max())) {
        bad_type(key, "an integer in range");
      }
      slot = static_cast<T>(raw);
    } else {
      slot = as_double(key, v);
    }
  };
  f.get = [member, owner](const ExperimentConfig& c) { return json((c.*owner).*member); };
  return f;
}

template <typename T>
Field sc(std::string key, T Scenario::*member) {
  return field(std::move(key), member, &ExperimentConfig::scenario);
}

template <typename T>
Field pl(std::string key, T RunPlan::*member) {
  return field(std::move(key), member, &ExperimentConfig::plan);
}

Field mapper_field(std::string key, std::size_t MapperOptions::*member) {
  Field f;
  f.key = key;
  f.set = [key, member](ExperimentConfig& c, const json& v) {
    const long long raw = as_integer(key, v);
    if (raw < 0) bad_type(key, "a non-negative integer");
    c.plan.mapper.*member = static_cast<std::size_t>(raw);
  };
  f.get = [member](const ExperimentConfig& c) { return json(c.plan.mapper.*member); };
  return f;
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> t;
    t.push_back(sc("area_side_m", &Scenario::area_side_m));
    t.push_back(sc("mbs_count", &Scenario::mbs_count));
    t.push_back(sc("cell_radius_m", &Scenario::cell_radius_m));
    t.push_back(sc("users_per_cell_max", &Scenario::users_per_cell_max));
    t.push_back(sc("uav_count", &Scenario::uav_count));
    t.push_back(sc("uav_capacity", &Scenario::uav_capacity));
    t.push_back(sc("noise_psd_dbm_hz", &Scenario::noise_psd_dbm_hz));
    t.push_back(sc("packet_size_bytes", &Scenario::packet_size_bytes));
    t.push_back(sc("altitude_min_ft", &Scenario::altitude_min_ft));
    t.push_back(sc("altitude_max_ft", &Scenario::altitude_max_ft));
    t.push_back(sc("offered_traffic_bps", &Scenario::offered_traffic_bps));
    t.push_back(sc("pathloss_exp", &Scenario::pathloss_exp));
    t.push_back(sc("tx_const_db", &Scenario::tx_const_db));
    t.push_back(sc("uav_power_dbm", &Scenario::uav_power_dbm));
    t.push_back(sc("requests_per_zone_min", &Scenario::requests_per_zone_min));
    t.push_back(sc("requests_per_zone_max", &Scenario::requests_per_zone_max));
    t.push_back(sc("bandwidth_hz", &Scenario::bandwidth_hz));
    t.push_back(sc("active_users", &Scenario::active_users));
    t.push_back(sc("extra_users", &Scenario::extra_users));
    t.push_back(sc("eta1", &Scenario::eta1));
    t.push_back(sc("eta2", &Scenario::eta2));
    t.push_back(sc("seed", &Scenario::seed));
    t.push_back(sc("uavs_enabled", &Scenario::uavs_enabled));
    t.push_back(sc("backhaul_cap_bps", &Scenario::backhaul_cap_bps));
    t.push_back(sc("delay_threshold_s", &Scenario::delay_threshold_s));
    t.push_back(sc("sinr_threshold", &Scenario::sinr_threshold));
    t.push_back(sc("se_coverage_threshold", &Scenario::se_coverage_threshold));
    t.push_back(sc("los_min_elevation_deg", &Scenario::los_min_elevation_deg));
    t.push_back(sc("los_coverage_fraction", &Scenario::los_coverage_fraction));
    t.push_back(sc("mbs_power_dbm", &Scenario::mbs_power_dbm));
    t.push_back(sc("mbs_height_m", &Scenario::mbs_height_m));
    t.push_back(sc("mbs_capacity", &Scenario::mbs_capacity));
    t.push_back(sc("processing_delay_s", &Scenario::processing_delay_s));
    t.push_back(sc("propagation_speed_mps", &Scenario::propagation_speed_mps));
    t.push_back(sc("max_zones", &Scenario::max_zones));
    t.push_back(sc("admission_squared", &Scenario::admission_squared));
    t.push_back(pl("horizon_steps", &RunPlan::horizon_steps));
    t.push_back(pl("epoch_steps", &RunPlan::epoch_steps));
    t.push_back(pl("step_seconds", &RunPlan::step_seconds));
    t.push_back(pl("replications", &RunPlan::replications));
    t.push_back(mapper_field("mapper_max_iters", &MapperOptions::max_iters));
    t.push_back(mapper_field("mapper_resets", &MapperOptions::resets));
    Field tol;
    tol.key = "mapper_tolerance";
    tol.set = [](ExperimentConfig& c, const json& v) {
      c.plan.mapper.tolerance = as_double("mapper_tolerance", v);
    };
    tol.get = [](const ExperimentConfig& c) { return json(c.plan.mapper.tolerance); };
    t.push_back(std::move(tol));
    return t;
  }();
  return table;
}

const Field* find_field(std::string_view key) {
  for (const auto& f : fields()) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

}  // namespace

void apply_override(ExperimentConfig& cfg, std::string_view key, const json& value) {
  const Field* f = find_field(key);
  if (f == nullptr) fail(ErrorCode::kConfig, "unknown config key '" + std::string(key) + "'");
  f->set(cfg, value);
}

void validate(const ExperimentConfig& cfg) {
  validate(cfg.scenario);
  validate(cfg.plan);
}

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kConfig, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::kConfig, "config must be a flat JSON object");
  ExperimentConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object() || value.is_array()) {
      fail(ErrorCode::kConfig, "config key '" + key + "' must hold a scalar");
    }
    apply_override(cfg, key, value);
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

json config_to_json(const ExperimentConfig& cfg) {
  json out = json::object();
  for (const auto& f : fields()) out[f.key] = f.get(cfg);
  return out;
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& f : fields()) keys.push_back(f.key);
  return keys;
}

}  // namespace uavhet
