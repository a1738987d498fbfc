#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riskgame/cli.hpp"

namespace cli = riskgame::cli;

int main(int argc, char** argv) {
  CLI::App app{
      "riskgame - two-agent investor/manager risk simulator with distorted-memory "
      "confidence"};
  app.require_subcommand(1);

  cli::SimulateOptions simulate;
  std::string simulate_format = "json";
  std::uint64_t simulate_seed = 0;
  CLI::App* sim = app.add_subcommand("simulate", "Run one episode and write its trajectory");
  sim->add_option("--config", simulate.config_path, "Config file (JSON)")->required();
  CLI::Option* sim_seed = sim->add_option("--seed", simulate_seed, "Seed override");
  sim->add_option("--out", simulate.out_path, "Trajectory output path")->required();
  sim->add_option("--format", simulate_format, "Output format: json (line-delimited) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  cli::SweepOptions sweep;
  std::string sweep_format = "csv";
  std::uint64_t sweep_seed = 0, sweep_reps = 0, sweep_rounds = 0;
  CLI::App* sw = app.add_subcommand("sweep", "Run a parameter sweep and write a results table");
  sw->add_option("--config", sweep.config_path, "Config file (JSON)")->required();
  sw->add_option("--param", sweep.parameter,
                 "Parameter to sweep: gamma_investor, gamma_manager, mu, mu1, mu2, mu3, "
                 "psi_base, alpha_success, cost_point")
      ->required();
  sw->add_option("--grid", sweep.grid, "Grid values (comma separated or repeated)")
      ->required()
      ->delimiter(',');
  CLI::Option* sw_reps = sw->add_option("--replications", sweep_reps, "Episodes per grid point");
  CLI::Option* sw_rounds = sw->add_option("--rounds", sweep_rounds, "Rounds per episode");
  CLI::Option* sw_seed = sw->add_option("--seed", sweep_seed, "Base seed override");
  sw->add_option("--out", sweep.out_path, "Output path (default: stdout)");
  sw->add_option("--format", sweep_format, "Output format: csv or json (line-delimited)")
      ->check(CLI::IsMember({"json", "csv"}));

  cli::CheckOptions check;
  std::uint64_t check_seed = 0;
  CLI::App* ck = app.add_subcommand("check", "Run model diagnostics for a config");
  ck->add_option("--config", check.config_path, "Config file (JSON)")->required();
  ck->add_option("--samples", check.oracle_samples, "Sample count for the oracle checks");
  CLI::Option* ck_seed = ck->add_option("--seed", check_seed, "Seed override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitConfigError;
  }

  return cli::run_guarded(
      [&]() -> int {
        if (sim->parsed()) {
          if (sim_seed->count() > 0) simulate.seed = simulate_seed;
          simulate.format = cli::parse_format(simulate_format);
          cli::cmd_simulate(simulate, std::cout);
          return cli::kExitOk;
        }
        if (sw->parsed()) {
          if (sw_reps->count() > 0) sweep.replications = sweep_reps;
          if (sw_rounds->count() > 0) sweep.rounds = sweep_rounds;
          if (sw_seed->count() > 0) sweep.seed = sweep_seed;
          sweep.format = cli::parse_format(sweep_format);
          cli::cmd_sweep(sweep, std::cout);
          return cli::kExitOk;
        }
        if (ck_seed->count() > 0) check.seed = check_seed;
        return cli::cmd_check(check, std::cout);
      },
      std::cerr);
}
