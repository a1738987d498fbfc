#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace riskgame::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;
inline constexpr int kExitIoError = 4;

enum class OutputFormat { Json, Csv };

// Throws ConfigError for anything other than "json" or "csv".
OutputFormat parse_format(const std::string& name);

struct SimulateOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;  // overrides simulation.seed
  std::string out_path;
  OutputFormat format = OutputFormat::Json;
};

// Runs one episode and writes the trajectory file; prints a one-line summary
// to `status`.  Throws ConfigError / DegenerateModelError / IoError.
void cmd_simulate(const SimulateOptions& options, std::ostream& status);

struct SweepOptions {
  std::string config_path;
  std::string parameter;
  std::vector<double> grid;
  std::optional<std::uint64_t> replications;  // default: simulation.replications
  std::optional<std::uint64_t> rounds;        // default: simulation.rounds
  std::optional<std::uint64_t> seed;          // default: simulation.seed
  std::string out_path;  // empty: write the table to `status`
  OutputFormat format = OutputFormat::Csv;
};

// Runs one replication batch per grid point and writes the results table.
void cmd_sweep(const SweepOptions& options, std::ostream& status);

struct CheckOptions {
  std::string config_path;
  std::uint64_t oracle_samples = 100000;
  std::optional<std::uint64_t> seed;
};

// Diagnostics: confidence-axiom verification for both agents' priors plus
// sampling-vs-closed-form agreement at the configured parameters.  Prints
// one line per check and returns the process exit code (0 all passed,
// 1 a check failed, 3 the configured model is degenerate).
int cmd_check(const CheckOptions& options, std::ostream& out);

// Maps exceptions from a command to the exit-code contract, reporting the
// error on `err`.
int run_guarded(const std::function<int()>& command, std::ostream& err);

}  // namespace riskgame::cli
