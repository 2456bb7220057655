// burgers: command-line front end for the time-split MacCormack solver.

#include "runner/commands.hpp"
#include "runner/config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

struct Overrides {
  std::map<std::string, std::string> values;

  void bind(CLI::App* app, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(
        "--" + key, [this, key](const std::string& v) { values[key] = v; }, help);
  }
};

void add_common_options(CLI::App* app, std::string& config_path, Overrides& overrides) {
  app->add_option("--config", config_path, "key = value config file");
  overrides.bind(app, "R", "Reynolds number");
  overrides.bind(app, "T", "final time");
  overrides.bind(app, "M", "cells per axis");
  overrides.bind(app, "N", "time steps");
  overrides.bind(app, "h", "spacing, or comma-separated list for converge (2^-p accepted)");
  overrides.bind(app, "coupling", "k_eq_R_half_h2 | k_eq_quarter_h | k_eq_h");
  overrides.bind(app, "substeps", "composite substeps m, or 'auto'");
  overrides.bind(app, "out", "output path");
  overrides.bind(app, "format", "table format: csv | json");
  overrides.bind(app, "snapshot-t", "comma-separated snapshot times");
  overrides.bind(app, "problem", "built-in problem name");
  overrides.bind(app, "time-sum", "include_initial | exclude_initial");
}

} // namespace

int main(int argc, char** argv) {
  using namespace burgers::cli;

  CLI::App app{"Time-split MacCormack solver for the 2D coupled viscous Burgers equations"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides overrides;
  auto* solve = app.add_subcommand("solve", "advance one problem to the final time");
  auto* converge = app.add_subcommand("converge", "run a refinement ladder and tabulate errors");
  auto* stability = app.add_subcommand("check-stability", "evaluate the time-step restriction");
  for (auto* sub : {solve, converge, stability}) {
    // -h would clash with the spacing option --h.
    sub->set_help_flag("--help", "print this help and exit");
    add_common_options(sub, config_path, overrides);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    ConfigMap map;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot read config '" << config_path << "'\n";
        return kExitIo;
      }
      std::ostringstream text;
      text << in.rdbuf();
      map = parse_key_values(text.str());
    }
    apply_overrides(map, overrides.values);
    const std::string command = solve->parsed()      ? "solve"
                                : converge->parsed() ? "converge"
                                                     : "check-stability";
    map["command"] = ConfigEntry{command, 0};
    return run_command(resolve_config(map), std::cout, std::cerr);
  } catch (const burgers::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}
