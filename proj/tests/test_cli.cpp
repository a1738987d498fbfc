#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "riskgame/cli.hpp"
#include "riskgame/config.hpp"
#include "riskgame/errors.hpp"

using namespace riskgame;
namespace fs = std::filesystem;

namespace {

const char* kActiveConfig = R"({
  "investor": {
    "gamma": 0.25,
    "policy": {"mode": "tiered", "mu1": 0.6, "mu2": 0.7, "mu3": 0.85},
    "initial_successes": 3,
    "initial_failures": 1
  },
  "manager": {"gamma": 0.25},
  "success_model": {"psi_base": 0.6},
  "simulation": {"rounds": 200, "replications": 4, "seed": 42}
})";

fs::path temp_dir() {
  const fs::path dir = fs::path("cli_test_tmp");
  fs::create_directories(dir);
  return dir;
}

fs::path write_temp(const std::string& name, const std::string& contents) {
  const fs::path path = temp_dir() / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  return path;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config round-trips through serialization") {
  config::RunConfig original = config::parse_config(kActiveConfig);
  const std::string first = config::serialize_config(original);
  config::RunConfig reparsed = config::parse_config(first);
  CHECK(config::serialize_config(reparsed) == first);
  CHECK(reparsed.episode.fingerprint() == original.episode.fingerprint());

  // A config exercising the other variants.
  config::RunConfig other;
  other.episode.investor_policy = agents::AllOrNothingPolicy(0.7);
  other.episode.manager_cost = agents::BetaCost{2.0, 3.0};
  other.episode.success.confidence_enhanced = true;
  other.episode.success.loss_rule = engine::InvestorLossRule::FailureIfEmbezzleSucceeds;
  const std::string dumped = config::serialize_config(other);
  config::RunConfig reloaded = config::parse_config(dumped);
  CHECK(config::serialize_config(reloaded) == dumped);
  CHECK(reloaded.episode.fingerprint() == other.episode.fingerprint());
}

TEST_CASE("unknown keys are rejected") {
  CHECK_THROWS_WITH_AS(config::parse_config(R"({"investor": {"gama": 0.2}})"),
                       doctest::Contains("unknown key"), ConfigError);
  CHECK_THROWS_WITH_AS(config::parse_config(R"({"investorr": {}})"),
                       doctest::Contains("unknown key"), ConfigError);
}

TEST_CASE("violated intervals are cited by name") {
  CHECK_THROWS_WITH_AS(
      config::parse_config(
          R"({"investor": {"policy": {"mode": "all_or_nothing", "mu": 0.4}}})"),
      doctest::Contains("(0.5; 1]"), ConfigError);
  CHECK_THROWS_WITH_AS(
      config::parse_config(
          R"({"investor": {"policy": {"mode": "tiered", "mu2": 0.9}}})"),
      doctest::Contains("(0.65; 0.8]"), ConfigError);
  CHECK_THROWS_WITH_AS(config::parse_config(R"({"investor": {"prior_success": 0}})"),
                       doctest::Contains("> 0"), ConfigError);
  CHECK_THROWS_WITH_AS(config::parse_config(R"({"manager": {"gamma": 1.2}})"),
                       doctest::Contains("[0, 1]"), ConfigError);
  CHECK_THROWS_AS(config::parse_config(R"({"simulation": {"rounds": 0}})"), ConfigError);
  CHECK_THROWS_AS(config::parse_config("{not json"), ConfigError);
}

TEST_CASE("simulate writes byte-identical trajectories for a fixed seed") {
  const fs::path config_path = write_temp("active.json", kActiveConfig);
  cli::SimulateOptions options;
  options.config_path = config_path.string();
  options.out_path = (temp_dir() / "a.jsonl").string();
  std::ostringstream status;
  cli::cmd_simulate(options, status);
  options.out_path = (temp_dir() / "b.jsonl").string();
  cli::cmd_simulate(options, status);
  const std::string a = read_file(temp_dir() / "a.jsonl");
  const std::string b = read_file(temp_dir() / "b.jsonl");
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(status.str().find("final_p0=") != std::string::npos);

  options.seed = 43;
  options.out_path = (temp_dir() / "c.jsonl").string();
  cli::cmd_simulate(options, status);
  CHECK(read_file(temp_dir() / "c.jsonl") != a);

  options.seed.reset();
  options.format = cli::OutputFormat::Csv;
  options.out_path = (temp_dir() / "a.csv").string();
  cli::cmd_simulate(options, status);
  const std::string csv = read_file(temp_dir() / "a.csv");
  CHECK(csv.rfind("round,p0,fraction", 0) == 0);
}

TEST_CASE("command errors map to the exit-code contract") {
  std::ostringstream err;
  CHECK(cli::run_guarded([]() -> int { throw ConfigError("x"); }, err) ==
        cli::kExitConfigError);
  CHECK(cli::run_guarded([]() -> int { throw DegenerateModelError("x"); }, err) ==
        cli::kExitRuntimeError);
  CHECK(cli::run_guarded([]() -> int { throw IoError("x"); }, err) == cli::kExitIoError);
  CHECK(cli::run_guarded([]() -> int { return 0; }, err) == 0);

  // Missing config file is an I/O failure, not a validation failure.
  cli::SimulateOptions options;
  options.config_path = (temp_dir() / "missing.json").string();
  options.out_path = (temp_dir() / "out.jsonl").string();
  std::ostringstream status;
  const int missing_rc = cli::run_guarded(
      [&] {
        cli::cmd_simulate(options, status);
        return 0;
      },
      err);
  CHECK(missing_rc == cli::kExitIoError);

  // Unwritable output path is an I/O failure too.
  const fs::path config_path = write_temp("active2.json", kActiveConfig);
  options.config_path = config_path.string();
  options.out_path = "/nonexistent_riskgame_dir/out.jsonl";
  const int unwritable_rc = cli::run_guarded(
      [&] {
        cli::cmd_simulate(options, status);
        return 0;
      },
      err);
  CHECK(unwritable_rc == cli::kExitIoError);

  // A config that fails validation is a config error.
  const fs::path bad_config = write_temp(
      "bad.json", R"({"investor": {"policy": {"mode": "all_or_nothing", "mu": 0.2}}})");
  options.config_path = bad_config.string();
  options.out_path = (temp_dir() / "out.jsonl").string();
  const int config_rc = cli::run_guarded(
      [&] {
        cli::cmd_simulate(options, status);
        return 0;
      },
      err);
  CHECK(config_rc == cli::kExitConfigError);
}

TEST_CASE("a one-point sweep emits a header and one row") {
  const fs::path config_path = write_temp("active3.json", kActiveConfig);
  cli::SweepOptions options;
  options.config_path = config_path.string();
  options.parameter = "gamma_investor";
  options.grid = {0.5};
  options.replications = 2;
  options.rounds = 50;
  std::ostringstream out;
  cli::cmd_sweep(options, out);
  std::istringstream lines(out.str());
  std::string header, row, extra;
  CHECK(std::getline(lines, header));
  CHECK(std::getline(lines, row));
  CHECK_FALSE(std::getline(lines, extra));
  CHECK(header.rfind("point_index,parameter,value", 0) == 0);
  CHECK(row.rfind("0,gamma_investor,0.5", 0) == 0);
}

TEST_CASE("gamma sweep reports the closed-form confidence column") {
  const fs::path config_path = write_temp("active4.json", kActiveConfig);
  cli::SweepOptions options;
  options.config_path = config_path.string();
  options.parameter = "gamma_investor";
  options.grid = {0.0, 0.5, 1.0};
  options.replications = 1;
  options.rounds = 20;
  options.out_path = (temp_dir() / "sweep.csv").string();
  std::ostringstream status;
  cli::cmd_sweep(options, status);
  const std::string first = read_file(temp_dir() / "sweep.csv");

  std::istringstream lines(first);
  std::string line;
  std::getline(lines, line);  // header
  const std::vector<double> expected = {0.6, 0.75, 1.0};
  for (double value : expected) {
    REQUIRE(std::getline(lines, line));
    const auto fields = split_csv_line(line);
    REQUIRE(fields.size() == 12);
    CHECK(std::stod(fields[11]) == doctest::Approx(value).epsilon(1e-9));
  }

  cli::cmd_sweep(options, status);
  CHECK(read_file(temp_dir() / "sweep.csv") == first);

  options.format = cli::OutputFormat::Json;
  options.out_path = (temp_dir() / "sweep.jsonl").string();
  cli::cmd_sweep(options, status);
  const std::string jsonl = read_file(temp_dir() / "sweep.jsonl");
  CHECK(jsonl.find("\"closed_form_confidence\":") != std::string::npos);
}

TEST_CASE("check passes on the shipped defaults and flags degeneracy") {
  const fs::path good = write_temp("good.json", kActiveConfig);
  std::ostringstream out;
  CHECK(cli::cmd_check({good.string(), 20000, std::nullopt}, out) == cli::kExitOk);
  CHECK(out.str().find("[PASS] belief.axioms.investor") != std::string::npos);
  CHECK(out.str().find("[PASS] oracle.investor") != std::string::npos);

  const fs::path degenerate = write_temp(
      "degenerate.json",
      R"({"investor": {"gamma": 1.0}, "success_model": {"psi_base": 0.0}})");
  std::ostringstream out2;
  CHECK(cli::cmd_check({degenerate.string(), 20000, std::nullopt}, out2) ==
        cli::kExitRuntimeError);
  CHECK(out2.str().find("[DEGENERATE]") != std::string::npos);
}

TEST_CASE("format names are validated") {
  CHECK(cli::parse_format("json") == cli::OutputFormat::Json);
  CHECK(cli::parse_format("csv") == cli::OutputFormat::Csv);
  CHECK_THROWS_AS(cli::parse_format("xml"), ConfigError);
}

}  // TEST_SUITE
