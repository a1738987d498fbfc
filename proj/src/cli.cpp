#include "riskgame/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "riskgame/config.hpp"
#include "riskgame/errors.hpp"
#include "riskgame/montecarlo.hpp"
#include "riskgame/serialize.hpp"

namespace riskgame::cli {

namespace {

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open output file '" + path + "'");
  }
  out << contents;
  out.flush();
  if (!out) {
    throw IoError("failed writing output file '" + path + "'");
  }
}

struct CheckResult {
  std::string name;
  bool passed = false;
  bool degenerate = false;
  std::string detail;
};

CheckResult axiom_check(const std::string& name, const belief::BeliefParams& priors) {
  CheckResult result;
  result.name = name;
  const belief::AxiomReport report = belief::verify_axioms(priors, {0.5, 1.0, 2.0, 5.0}, 1000);
  result.passed = report.all_passed();
  std::ostringstream detail;
  detail << "bounds=" << (report.bounds.passed ? "ok" : "violated")
         << " monotone=" << (report.monotone.passed ? "ok" : "violated")
         << " limit=" << (report.limit.passed ? "ok" : "violated")
         << " final_deviation<=" << serialize::format_double(report.limit_tolerance);
  result.detail = detail.str();
  return result;
}

CheckResult oracle_check(const std::string& name, double gamma, double alpha_success,
                         std::uint64_t samples, std::uint64_t seed) {
  CheckResult result;
  result.name = name;
  const perception::PerceptionMatrix matrix(gamma);
  const perception::RecollectionProcess recollection = perception::default_recollection();
  const perception::TrueFrequencies frequencies(alpha_success);
  try {
    const double closed = perception::asymptotic_confidence(matrix, recollection, frequencies);
    const auto oracle =
        montecarlo::empirical_confidence_oracle(frequencies, matrix, recollection, samples, seed);
    if (!oracle.has_value()) {
      result.degenerate = true;
      result.detail = "no experience recorded in " + std::to_string(samples) + " samples";
      return result;
    }
    const double diff = std::abs(oracle->estimate - closed);
    result.passed = diff <= 3.0 * oracle->standard_error;
    std::ostringstream detail;
    detail << "closed_form=" << serialize::format_double(closed)
           << " sampled=" << serialize::format_double(oracle->estimate)
           << " se=" << serialize::format_double(oracle->standard_error)
           << " |diff|=" << serialize::format_double(diff);
    result.detail = detail.str();
  } catch (const DegenerateModelError& e) {
    result.degenerate = true;
    result.detail = e.what();
  }
  return result;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw ConfigError("format must be json or csv, got '" + name + "'");
}

void cmd_simulate(const SimulateOptions& options, std::ostream& status) {
  const config::RunConfig run = config::load_config_file(options.config_path);
  const std::uint64_t seed = options.seed.value_or(run.seed);
  const engine::Trajectory trajectory = engine::run_episode(run.episode, seed);

  std::ostringstream body;
  if (options.format == OutputFormat::Json) {
    serialize::write_trajectory_jsonl(body, trajectory);
  } else {
    serialize::write_trajectory_csv(body, trajectory);
  }
  write_file(options.out_path, body.str());

  const montecarlo::EpisodeSummary summary =
      montecarlo::summarize_episode(trajectory, run.episode, 0);
  status << "simulate: seed=" << seed << " rounds=" << summary.total_rounds
         << " invested=" << summary.invested_rounds
         << " embezzled=" << summary.embezzled_rounds
         << " final_p0=" << serialize::format_double(summary.final_p0)
         << " final_p1=" << serialize::format_double(summary.final_p1)
         << " out=" << options.out_path << "\n";
}

void cmd_sweep(const SweepOptions& options, std::ostream& status) {
  const config::RunConfig run = config::load_config_file(options.config_path);

  montecarlo::SweepSpec spec;
  spec.parameter = montecarlo::parse_parameter(options.parameter);
  spec.grid = options.grid;
  spec.replications = options.replications.value_or(run.replications);
  spec.rounds = options.rounds.value_or(run.episode.rounds);
  spec.base_seed = options.seed.value_or(run.seed);

  const std::vector<montecarlo::SweepRow> rows = montecarlo::sweep(run.episode, spec);

  std::ostringstream body;
  if (options.format == OutputFormat::Csv) {
    serialize::write_sweep_csv(body, rows);
  } else {
    serialize::write_sweep_jsonl(body, rows);
  }
  if (options.out_path.empty()) {
    status << body.str();
  } else {
    write_file(options.out_path, body.str());
    status << "sweep: parameter=" << montecarlo::parameter_name(spec.parameter)
           << " points=" << rows.size() << " replications=" << spec.replications
           << " rounds=" << spec.rounds << " out=" << options.out_path << "\n";
  }
}

int cmd_check(const CheckOptions& options, std::ostream& out) {
  const config::RunConfig run = config::load_config_file(options.config_path);
  const std::uint64_t seed = options.seed.value_or(run.seed);
  const engine::EpisodeConfig& ep = run.episode;

  std::vector<CheckResult> results;
  results.push_back(axiom_check("belief.axioms.investor", ep.investor_belief));
  results.push_back(axiom_check("belief.axioms.manager", ep.manager_belief));
  // Investor channel: under honest play the true outcome frequency is the
  // base project success probability.
  results.push_back(oracle_check("oracle.investor", ep.investor_gamma, ep.success.psi_base,
                                 options.oracle_samples, derive_seed(seed, {0x11})));
  // Manager channel: nominal diversion success at uninformed confidences.
  results.push_back(oracle_check(
      "oracle.manager", ep.manager_gamma,
      ep.success.embezzle_success_probability(0.5, 0.5), options.oracle_samples,
      derive_seed(seed, {0x12})));

  bool any_failed = false;
  bool any_degenerate = false;
  for (const CheckResult& r : results) {
    const char* tag = r.passed ? "[PASS]" : (r.degenerate ? "[DEGENERATE]" : "[FAIL]");
    out << tag << " " << r.name << ": " << r.detail << "\n";
    any_failed = any_failed || (!r.passed && !r.degenerate);
    any_degenerate = any_degenerate || r.degenerate;
  }
  if (any_degenerate) return kExitRuntimeError;
  return any_failed ? kExitCheckFailed : kExitOk;
}

int run_guarded(const std::function<int()>& command, std::ostream& err) {
  try {
    return command();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DegenerateModelError& e) {
    err << "degenerate model: " << e.what() << "\n";
    return kExitRuntimeError;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}

}  // namespace riskgame::cli
