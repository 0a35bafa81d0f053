#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "uavhet/uavhet.h"

namespace {

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string uavs;
  std::string out = "out";
  std::optional<std::uint32_t> replications;
  std::optional<std::uint32_t> horizon;
  std::string grid_path;
};

int report_error(const std::string& code, const std::string& message, int exit_code) {
  nlohmann::json err = {{"error", {{"code", code}, {"message", message}}}};
  std::cerr << err.dump() << '\n';
  return exit_code;
}

int report_status(uavhet_status status) {
  return report_error(uavhet_status_name(status), uavhet_last_error(), static_cast<int>(status));
}

class ConfigHandle {
 public:
  ~ConfigHandle() { uavhet_config_destroy(cfg_); }
  uavhet_config** out() { return &cfg_; }
  uavhet_config* get() const { return cfg_; }

 private:
  uavhet_config* cfg_ = nullptr;
};

uavhet_status build_config(const Options& o, ConfigHandle& cfg) {
  uavhet_status st = o.config_path.empty() ? uavhet_config_create_default(cfg.out())
                                           : uavhet_config_load_file(o.config_path.c_str(), cfg.out());
  if (st != UAVHET_OK) return st;
  if (o.seed && (st = uavhet_config_set_seed(cfg.get(), *o.seed)) != UAVHET_OK) return st;
  if (!o.uavs.empty() &&
      (st = uavhet_config_set_uavs_enabled(cfg.get(), o.uavs == "on" ? 1 : 0)) != UAVHET_OK) {
    return st;
  }
  if (o.replications &&
      (st = uavhet_config_set_replications(cfg.get(), *o.replications)) != UAVHET_OK) {
    return st;
  }
  if (o.horizon && (st = uavhet_config_set_horizon(cfg.get(), *o.horizon)) != UAVHET_OK) return st;
  return UAVHET_OK;
}

int finish(uavhet_status st, char*& text) {
  if (text != nullptr) {
    std::cout << text;
    uavhet_string_free(text);
    text = nullptr;
  }
  return st == UAVHET_OK ? 0 : report_status(st);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "Flat JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "Base RNG seed");
  cmd->add_option("--uavs", o.uavs, "Enable UAV tier")->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--replications", o.replications, "Seeded replications")
      ->check(CLI::Range(1u, 100000u));
  cmd->add_option("--horizon", o.horizon, "Simulated steps per replication")
      ->check(CLI::Range(1u, 100000000u));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV-assisted HetNet simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(uavhet_version()));
  Options o;

  auto* run = app.add_subcommand("run", "Run one configuration and write its outputs");
  add_common(run, o);
  auto* sweep = app.add_subcommand("sweep", "Sweep a parameter grid in both modes and plot");
  add_common(sweep, o);
  sweep->add_option("--grid", o.grid_path, "JSON array of override objects")
      ->check(CLI::ExistingFile);
  auto* compare = app.add_subcommand("compare", "Run baseline and UAV modes on shared seeds");
  add_common(compare, o);
  auto* report = app.add_subcommand("report", "Re-aggregate steps.csv in --out");
  report->add_option("--out", o.out, "Run directory holding steps.csv");
  report->add_option("--config", o.config_path, "Config supplying thresholds")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), UAVHET_INVALID_ARGUMENT);
  }

  char* text = nullptr;
  if (report->parsed()) {
    if (o.config_path.empty()) {
      const auto st = uavhet_report(o.out.c_str(), nullptr, &text);
      return finish(st, text);
    }
    ConfigHandle cfg;
    if (const auto st = build_config(o, cfg); st != UAVHET_OK) return report_status(st);
    const auto st = uavhet_report(o.out.c_str(), cfg.get(), &text);
    return finish(st, text);
  }

  ConfigHandle cfg;
  if (const auto st = build_config(o, cfg); st != UAVHET_OK) return report_status(st);

  if (run->parsed()) {
    const auto st = uavhet_run_to_dir(cfg.get(), o.out.c_str(), &text);
    return finish(st, text);
  }
  if (compare->parsed()) {
    const auto st = uavhet_compare(cfg.get(), o.out.c_str(), &text);
    return finish(st, text);
  }
  std::string grid;
  if (!o.grid_path.empty()) {
    std::ifstream in(o.grid_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    grid = buf.str();
  }
  const auto st = uavhet_sweep(cfg.get(), grid.empty() ? nullptr : grid.c_str(), o.out.c_str(), &text);
  return finish(st, text);
}
