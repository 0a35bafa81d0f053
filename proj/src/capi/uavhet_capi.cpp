#include "uavhet/uavhet.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <new>
#include <string>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/io.hpp"
#include "core/runner.hpp"

struct uavhet_config {
  uavhet::ExperimentConfig cfg;
};

struct uavhet_result {
  uavhet::RunResult run;
};

namespace {

thread_local std::string g_last_error;

uavhet_status to_status(uavhet::ErrorCode code) {
  switch (code) {
    case uavhet::ErrorCode::kInvalidArgument:
      return UAVHET_INVALID_ARGUMENT;
    case uavhet::ErrorCode::kConfig:
      return UAVHET_CONFIG;
    case uavhet::ErrorCode::kIo:
      return UAVHET_IO;
    case uavhet::ErrorCode::kNumeric:
      return UAVHET_NUMERIC;
    case uavhet::ErrorCode::kInternal:
      return UAVHET_INTERNAL;
  }
  return UAVHET_INTERNAL;
}

template <typename F>
uavhet_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const uavhet::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return UAVHET_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return UAVHET_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return UAVHET_INTERNAL;
  }
}

uavhet_status invalid(const char* what) {
  g_last_error = what;
  return UAVHET_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(char** out, const std::string& s) {
  if (out != nullptr) *out = dup_string(s);
}

uint32_t failures(const uavhet::RunResult& r) {
  uint32_t n = 0;
  for (const auto& rep : r.replications) n += rep.error ? 1 : 0;
  return n;
}

uavhet_status numeric_if_failed(const uavhet::RunResult& r) {
  for (const auto& rep : r.replications) {
    if (rep.error) {
      g_last_error = "replication " + std::to_string(rep.replication) + ": " + *rep.error;
      return UAVHET_NUMERIC;
    }
  }
  return UAVHET_OK;
}

template <typename T>
uavhet_status create(uavhet_config** out, T&& make) {
  if (out == nullptr) return invalid("out must not be NULL");
  *out = nullptr;
  return guarded([&] {
    auto* c = new uavhet_config{make()};
    *out = c;
    return UAVHET_OK;
  });
}

template <typename F>
uavhet_status edit(uavhet_config* cfg, F&& change) {
  if (cfg == nullptr) return invalid("config must not be NULL");
  return guarded([&] {
    uavhet::ExperimentConfig next = cfg->cfg;
    change(next);
    uavhet::validate(next);
    cfg->cfg = std::move(next);
    return UAVHET_OK;
  });
}

}  // namespace

extern "C" {

const char* uavhet_version(void) { return "1.0.0"; }

const char* uavhet_status_name(uavhet_status status) {
  switch (status) {
    case UAVHET_OK:
      return "ok";
    case UAVHET_INVALID_ARGUMENT:
      return "invalid_argument";
    case UAVHET_CONFIG:
      return "config";
    case UAVHET_IO:
      return "io";
    case UAVHET_NUMERIC:
      return "numeric";
    case UAVHET_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* uavhet_last_error(void) { return g_last_error.c_str(); }

void uavhet_string_free(char* s) { std::free(s); }

uavhet_status uavhet_config_create_default(uavhet_config** out) {
  return create(out, [] { return uavhet::ExperimentConfig{}; });
}

uavhet_status uavhet_config_load_file(const char* path, uavhet_config** out) {
  if (path == nullptr) return invalid("path must not be NULL");
  return create(out, [&] { return uavhet::load_config_file(path); });
}

uavhet_status uavhet_config_load_json(const char* json_text, uavhet_config** out) {
  if (json_text == nullptr) return invalid("json_text must not be NULL");
  return create(out, [&] { return uavhet::parse_config(json_text); });
}

void uavhet_config_destroy(uavhet_config* cfg) { delete cfg; }

uavhet_status uavhet_config_set_seed(uavhet_config* cfg, uint64_t seed) {
  return edit(cfg, [&](uavhet::ExperimentConfig& c) { c.scenario.seed = seed; });
}

uavhet_status uavhet_config_set_uavs_enabled(uavhet_config* cfg, int enabled) {
  return edit(cfg, [&](uavhet::ExperimentConfig& c) { c.scenario.uavs_enabled = enabled != 0; });
}

uavhet_status uavhet_config_set_replications(uavhet_config* cfg, uint32_t replications) {
  return edit(cfg, [&](uavhet::ExperimentConfig& c) { c.plan.replications = replications; });
}

uavhet_status uavhet_config_set_horizon(uavhet_config* cfg, uint32_t steps) {
  return edit(cfg, [&](uavhet::ExperimentConfig& c) {
    c.plan.horizon_steps = steps;
    if (c.plan.epoch_steps > steps) c.plan.epoch_steps = steps;
  });
}

uavhet_status uavhet_config_set_number(uavhet_config* cfg, const char* key, double value) {
  if (key == nullptr) return invalid("key must not be NULL");
  return edit(cfg, [&](uavhet::ExperimentConfig& c) {
    uavhet::apply_override(c, key, nlohmann::json(value));
  });
}

uavhet_status uavhet_config_to_json(const uavhet_config* cfg, char** out_json) {
  if (cfg == nullptr || out_json == nullptr) return invalid("arguments must not be NULL");
  return guarded([&] {
    emit(out_json, uavhet::dump_json(uavhet::config_to_json(cfg->cfg)));
    return UAVHET_OK;
  });
}

uavhet_status uavhet_run(const uavhet_config* cfg, uavhet_result** out) {
  if (cfg == nullptr || out == nullptr) return invalid("arguments must not be NULL");
  *out = nullptr;
  return guarded([&] {
    auto* r = new uavhet_result{uavhet::run(cfg->cfg.scenario, cfg->cfg.plan, true)};
    *out = r;
    return UAVHET_OK;
  });
}

void uavhet_result_destroy(uavhet_result* result) { delete result; }

uavhet_status uavhet_result_write(const uavhet_result* result, const char* out_dir) {
  if (result == nullptr || out_dir == nullptr) return invalid("arguments must not be NULL");
  return guarded([&] {
    uavhet::write_run(result->run, out_dir);
    return UAVHET_OK;
  });
}

uavhet_status uavhet_result_metrics_json(const uavhet_result* result, char** out_json) {
  if (result == nullptr || out_json == nullptr) return invalid("arguments must not be NULL");
  return guarded([&] {
    emit(out_json, uavhet::dump_json(uavhet::metrics_document(result->run)));
    return UAVHET_OK;
  });
}

uint32_t uavhet_result_failed_replications(const uavhet_result* result) {
  return result == nullptr ? 0 : failures(result->run);
}

uavhet_status uavhet_run_to_dir(const uavhet_config* cfg, const char* out_dir,
                                char** out_metrics_json) {
  if (cfg == nullptr || out_dir == nullptr) return invalid("arguments must not be NULL");
  return guarded([&] {
    const auto res = uavhet::run_to_directory(cfg->cfg, out_dir);
    emit(out_metrics_json, uavhet::dump_json(uavhet::metrics_document(res)));
    return numeric_if_failed(res);
  });
}

uavhet_status uavhet_compare(const uavhet_config* cfg, const char* out_dir, char** out_summary_json) {
  if (cfg == nullptr || out_dir == nullptr) return invalid("arguments must not be NULL");
  return guarded([&] {
    const auto summary = uavhet::compare(cfg->cfg, out_dir);
    emit(out_summary_json, uavhet::dump_json(summary));
    for (const auto& s : summary.at("per_seed")) {
      if (s.contains("error")) {
        g_last_error = s.at("error").get<std::string>();
        return UAVHET_NUMERIC;
      }
    }
    return UAVHET_OK;
  });
}

uavhet_status uavhet_sweep(const uavhet_config* cfg, const char* grid_json, const char* out_dir,
                           char** out_summary_json) {
  if (cfg == nullptr || out_dir == nullptr) return invalid("arguments must not be NULL");
  return guarded([&] {
    const auto grid = grid_json != nullptr ? uavhet::parse_grid(grid_json)
                                           : uavhet::default_grid(cfg->cfg.scenario);
    const auto rows = uavhet::sweep(cfg->cfg, grid);
    const auto doc = uavhet::write_sweep(cfg->cfg, rows, out_dir);
    emit(out_summary_json, uavhet::dump_json(doc));
    return UAVHET_OK;
  });
}

uavhet_status uavhet_report(const char* run_dir, const uavhet_config* cfg, char** out_report_json) {
  if (run_dir == nullptr) return invalid("run_dir must not be NULL");
  return guarded([&] {
    namespace fs = std::filesystem;
    const fs::path dir(run_dir);
    uavhet::Scenario scenario;
    if (cfg != nullptr) {
      scenario = cfg->cfg.scenario;
    } else if (fs::exists(dir / "metrics.json")) {
      const auto doc = nlohmann::json::parse(uavhet::read_text(dir / "metrics.json"), nullptr, false);
      if (doc.is_discarded() || !doc.contains("config")) {
        uavhet::fail(uavhet::ErrorCode::kIo, "metrics.json has no config section");
      }
      scenario = uavhet::parse_config(doc.at("config").dump()).scenario;
    }
    const auto report = uavhet::report_from_csv(dir / "steps.csv", uavhet::thresholds_of(scenario));
    const std::string text = uavhet::dump_json(report);
    uavhet::write_text(dir / "report.json", text);
    emit(out_report_json, text);
    return UAVHET_OK;
  });
}

}  // extern "C"
