#include <CLI11.hpp>

#include <iostream>

#include "rollsim/app/run.hpp"

using namespace rollsim::app;

namespace {

struct Invocation {
  std::string scenario;
  RunOptions opts;
};

void add_run_flags(CLI::App* cmd, Invocation& inv) {
  cmd->add_option("--scenario", inv.scenario, "Scenario file (YAML or JSON)")->required();
  cmd->add_option("--out", inv.opts.out_prefix, "Output path prefix (overrides output_prefix)");
  cmd->add_option("--jobs", inv.opts.jobs, "Worker threads for grid tuning");
  cmd->add_option("--dt", inv.opts.dt, "Override sim.dt [s]");
  cmd->add_option("--t-end", inv.opts.t_end, "Override sim.t_end [s]");
}

int run(const Invocation& inv, ScenarioKind expected) {
  Scenario sc;
  try {
    sc = load_scenario(inv.scenario, parse_options_from_env());
    for (const auto& w : sc.warnings) std::cerr << "warning: " << w << "\n";
    if (sc.kind != expected) {
      throw ScenarioError("kind", std::string("scenario is '") + to_string(sc.kind) +
                                      "' but the subcommand is '" + to_string(expected) + "'");
    }
    apply_overrides(sc, inv.opts);
  } catch (const rollsim::InvalidArgument& e) {
    std::cerr << "error: " << inv.scenario << ": " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    const RunOutcome out = run_scenario(sc);
    std::cout << "wrote " << out.json_path << "\n";
    for (const auto& p : out.csv_paths) std::cout << "wrote " << p << "\n";
    if (out.exit_code == kExitDiverged) {
      std::cerr << "simulation diverged at t = "
                << out.report["results"].value("diverged_at", nlohmann::json()).dump() << " s\n";
    }
    return out.exit_code;
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const rollsim::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rolling-stand sizing, loop simulation and PID tuning"};
  app.require_subcommand(1);

  Invocation inv;
  struct Entry {
    const char* name;
    const char* help;
    ScenarioKind kind;
  };
  const Entry entries[] = {
      {"size", "Drive-train sizing from material and pass geometry", ScenarioKind::size},
      {"simulate", "Closed-loop simulation", ScenarioKind::simulate},
      {"tune", "PID gain search", ScenarioKind::tune},
      {"poles", "Pole and Routh analysis", ScenarioKind::poles},
  };
  std::vector<std::pair<CLI::App*, ScenarioKind>> commands;
  for (const auto& e : entries) {
    CLI::App* cmd = app.add_subcommand(e.name, e.help);
    add_run_flags(cmd, inv);
    commands.emplace_back(cmd, e.kind);
  }
  CLI::App* version = app.add_subcommand("version", "Print the tool version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (version->parsed()) {
    std::cout << kToolName << " " << tool_version() << "\n";
    return kExitOk;
  }
  for (const auto& [cmd, kind] : commands) {
    if (cmd->parsed()) return run(inv, kind);
  }
  return kExitInputError;
}
