// Command-line driver: purity sweeps, exact-vs-closed-form comparison and the
// figure datasets, written as CSV.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "jc/errors.hpp"
#include "jc/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

using FlagMap = std::map<std::string, std::string>;

// Flag name -> RunConfig key.
const std::pair<const char*, const char*> kRunFlags[] = {
    {"--nbar", "nbar"},
    {"--lambda", "lambda"},
    {"--pg", "p_g"},
    {"--theta", "theta"},
    {"--phi", "phi"},
    {"--field", "field_kind"},
    {"--tophat-halfwidth", "tophat_halfwidth"},
    {"--cutoff", "cutoff"},
    {"--tmax-tr", "t_max_over_tr"},
    {"--steps", "steps"},
    {"--mode", "mode"},
    {"--out", "output_path"},
};

void add_flags(CLI::App& sub, FlagMap& flags, std::string& config_path,
               std::initializer_list<std::string_view> only = {}) {
  for (const auto& [flag, key] : kRunFlags) {
    if (only.size() != 0 && std::find(only.begin(), only.end(), flag) == only.end()) continue;
    sub.add_option_function<std::string>(
        flag, [&flags, key = std::string(key)](const std::string& v) { flags[key] = v; },
        std::string("sets ") + key);
  }
  if (only.size() == 0) {
    sub.add_option("--config", config_path, "flat key = value file; flags take precedence");
  }
}

jc::RunConfig build_config(jc::RunConfig cfg, const std::string& config_path,
                           const FlagMap& flags) {
  if (!config_path.empty()) jc::apply_config_file(cfg, config_path);
  for (const auto& [key, value] : flags) jc::set_config_field(cfg, key, value);
  jc::validate(cfg);
  return cfg;
}

void write_rows(const jc::RunConfig& cfg, const std::vector<jc::SweepRow>& rows) {
  if (cfg.output_path.empty()) {
    jc::write_csv(std::cout, rows);
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw jc::ConfigError("output_path", "cannot write " + cfg.output_path);
  jc::write_csv(out, rows);
}

int run_sweep_command(const std::string& config_path, const FlagMap& flags) {
  const jc::RunConfig cfg = build_config({}, config_path, flags);
  write_rows(cfg, jc::run_sweep(cfg));
  return 0;
}

int run_compare_command(const std::string& config_path, const FlagMap& flags) {
  const jc::RunConfig cfg = build_config({}, config_path, flags);
  const jc::CompareReport r = jc::compare_report(cfg);
  nlohmann::ordered_json j;
  j["nbar"] = cfg.nbar;
  j["lambda"] = cfg.lambda;
  j["p_g"] = cfg.p_g;
  j["theta"] = cfg.theta;
  j["phi"] = cfg.phi;
  j["field_kind"] = jc::to_string(cfg.field_kind);
  j["samples"] = r.samples;
  j["max_abs_deviation"] = r.max_abs_deviation;
  j["rms_deviation"] = r.rms_deviation;
  j["transient_rate"] = r.transient_rate;
  j["transient_rate_expected"] = r.transient_rate_expected;
  j["purity_at_half_revival"] = r.purity_at_half_revival;
  const std::string text = j.dump(2) + "\n";
  if (cfg.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output_path);
    if (!out) throw jc::ConfigError("output_path", "cannot write " + cfg.output_path);
    out << text;
  }
  return 0;
}

int run_figure_command(int figure, const FlagMap& flags) {
  const std::filesystem::path dir =
      flags.contains("output_path") ? flags.at("output_path") : std::string(".");
  std::filesystem::create_directories(dir);
  for (auto& run : jc::figure_runs(figure)) {
    jc::RunConfig cfg = run.config;
    for (const auto& [key, value] : flags) {
      if (key != "output_path") jc::set_config_field(cfg, key, value);
    }
    cfg.output_path = (dir / (run.name + ".csv")).string();
    jc::validate(cfg);
    write_rows(cfg, jc::run_sweep(cfg));
    std::cerr << "wrote " << cfg.output_path << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atomic purity dynamics in the resonant Jaynes-Cummings model"};
  app.require_subcommand(1);

  FlagMap flags;
  std::string config_path;

  auto* sweep = app.add_subcommand("sweep", "purity time series as CSV");
  add_flags(*sweep, flags, config_path);
  auto* compare = app.add_subcommand("compare", "exact vs closed-form summary as JSON");
  add_flags(*compare, flags, config_path);

  CLI::App* figures[3];
  for (int f = 1; f <= 3; ++f) {
    figures[f - 1] = app.add_subcommand("fig" + std::to_string(f),
                                        "write the figure " + std::to_string(f) +
                                            " datasets into the --out directory");
    add_flags(*figures[f - 1], flags, config_path, {"--out", "--steps", "--lambda"});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (sweep->parsed()) return run_sweep_command(config_path, flags);
    if (compare->parsed()) return run_compare_command(config_path, flags);
    for (int f = 0; f < 3; ++f) {
      if (figures[f]->parsed()) return run_figure_command(f + 1, flags);
    }
  } catch (const jc::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const jc::DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const jc::TruncationError& e) {
    std::cerr << "truncation error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const jc::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
