#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "riskgame/engine.hpp"
#include "riskgame/serialize.hpp"

using namespace riskgame;
using agents::InvestedFraction;
using perception::Impulse;
using perception::Outcome;

namespace {

// Episode setup with live dynamics: the investor starts confident enough to
// commit funds and the manager faces uniform costs, so every stochastic
// field gets exercised.
engine::EpisodeConfig active_config() {
  engine::EpisodeConfig config;
  config.investor_gamma = 0.25;
  config.investor_policy = agents::TieredPolicy(0.6, 0.7, 0.85);
  config.investor_initial_counts = {3, 1};
  config.manager_gamma = 0.25;
  config.manager_cost = agents::UniformCost{};
  config.success.psi_base = 0.6;
  config.rounds = 300;
  return config;
}

// Honest-only setup: the cost point mass at 1.0 can never be covered by a
// confidence strictly below 1.
engine::EpisodeConfig honest_config(double gamma, std::uint64_t rounds) {
  engine::EpisodeConfig config;
  config.investor_gamma = gamma;
  config.investor_policy = agents::AllOrNothingPolicy(0.505);
  config.investor_initial_counts = {50, 0};
  config.manager_cost = agents::PointMassCost{1.0};
  config.success.psi_base = 0.6;
  config.rounds = rounds;
  return config;
}

std::string to_jsonl(const engine::Trajectory& trajectory) {
  std::ostringstream out;
  serialize::write_trajectory_jsonl(out, trajectory);
  return out.str();
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("default embezzlement success law") {
  const engine::EmbezzleCoefficients defaults;
  CHECK(engine::default_embezzle_success(0.0, 0.0, defaults) == 0.5);
  CHECK(engine::default_embezzle_success(1.0, 1.0, defaults) ==
        doctest::Approx(0.6).epsilon(1e-12));
  CHECK(engine::default_embezzle_success(0.3, 0.9, {1.0, 0.0, 0.0}) == 1.0);
  CHECK(engine::default_embezzle_success(1.0, 0.0, {0.1, 0.0, 0.2}) == 0.0);
  CHECK_THROWS_AS(engine::default_embezzle_success(-0.1, 0.5, defaults),
                  std::invalid_argument);
}

TEST_CASE("confidence-enhanced success shifts with investor confidence") {
  engine::SuccessModel model;
  model.psi_base = 0.6;
  CHECK(model.project_success_probability(0.9) == 0.6);
  model.confidence_enhanced = true;
  model.confidence_gain = 0.2;
  CHECK(model.project_success_probability(0.5) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(model.project_success_probability(1.0) == doctest::Approx(0.7).epsilon(1e-12));
  model.confidence_gain = 2.0;
  CHECK(model.project_success_probability(1.0) == 1.0);
}

TEST_CASE("an unconvinced investor leaves no trace") {
  engine::GameState state;
  engine::Policies policies;
  policies.investor = agents::AllOrNothingPolicy(0.7);
  const engine::SuccessModel model;
  const engine::RoundRecord record =
      engine::run_round(state, policies, model, engine::RoundRandomness(1, 0));
  CHECK(record.p0 == 0.5);
  CHECK(record.fraction == InvestedFraction::None);
  CHECK_FALSE(record.p1.has_value());
  CHECK_FALSE(record.cost.has_value());
  CHECK_FALSE(record.embezzled.has_value());
  CHECK_FALSE(record.investor_outcome.has_value());
  CHECK(state.investor.counts == belief::MemoryCounts{0, 0});
  CHECK(state.manager.counts == belief::MemoryCounts{0, 0});
}

TEST_CASE("full distortion never records a failure") {
  engine::EpisodeConfig config;
  config.investor_gamma = 1.0;
  config.investor_policy = agents::AllOrNothingPolicy(0.6);
  config.investor_initial_counts = {1, 0};
  config.manager_cost = agents::PointMassCost{1.0};
  config.success.psi_base = 0.6;
  config.rounds = 1000;

  const engine::Trajectory trajectory = engine::run_episode(config, 424242);
  std::uint64_t invested = 0;
  for (const engine::RoundRecord& r : trajectory.rounds) {
    if (r.fraction != InvestedFraction::None) ++invested;
  }
  REQUIRE(invested == 1000);
  const belief::MemoryCounts final_counts = trajectory.rounds.back().investor_counts_after;
  CHECK(final_counts.failures == 0);
  // Successes beyond the seeded one are Binomial(1000, 0.6).
  const double sigma = std::sqrt(1000 * 0.6 * 0.4);
  CHECK(std::abs(static_cast<double>(final_counts.successes - 1) - 600.0) <= 3.0 * sigma);
}

TEST_CASE("episodes are deterministic given config and seed") {
  const engine::EpisodeConfig config = active_config();
  const engine::Trajectory a = engine::run_episode(config, 20250809);
  const engine::Trajectory b = engine::run_episode(config, 20250809);
  CHECK(to_jsonl(a) == to_jsonl(b));
}

TEST_CASE("round count and indices follow the config") {
  engine::EpisodeConfig config = active_config();
  config.rounds = 0;
  CHECK_THROWS_AS(engine::run_episode(config, 1), std::invalid_argument);
  config.rounds = 57;
  const engine::Trajectory trajectory = engine::run_episode(config, 1);
  REQUIRE(trajectory.rounds.size() == 57);
  for (std::uint64_t t = 0; t < 57; ++t) {
    REQUIRE(trajectory.rounds[t].round_index == t);
  }
}

TEST_CASE("adjacent seeds give distinct trajectories") {
  const engine::EpisodeConfig config = active_config();
  for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
    const engine::Trajectory a = engine::run_episode(config, seed);
    const engine::Trajectory b = engine::run_episode(config, seed + 1);
    REQUIRE(to_jsonl(a) != to_jsonl(b));
  }
}

TEST_CASE("memory only grows, one experience at a time") {
  const engine::EpisodeConfig config = active_config();
  const engine::Trajectory trajectory = engine::run_episode(config, 77);
  belief::MemoryCounts investor = config.investor_initial_counts;
  belief::MemoryCounts manager = config.manager_initial_counts;
  for (const engine::RoundRecord& r : trajectory.rounds) {
    const auto& ia = r.investor_counts_after;
    const auto& ma = r.manager_counts_after;
    REQUIRE(ia.successes >= investor.successes);
    REQUIRE(ia.failures >= investor.failures);
    REQUIRE(ma.successes >= manager.successes);
    REQUIRE(ma.failures >= manager.failures);
    const std::uint64_t investor_delta = (ia.successes - investor.successes) +
                                         (ia.failures - investor.failures);
    const std::uint64_t manager_delta = (ma.successes - manager.successes) +
                                        (ma.failures - manager.failures);
    REQUIRE(investor_delta <= 1);
    REQUIRE(manager_delta <= 1);
    if (r.fraction == InvestedFraction::None) {
      REQUIRE(investor_delta == 0);
      REQUIRE(manager_delta == 0);
      REQUIRE_FALSE(r.p1.has_value());
      REQUIRE_FALSE(r.investor_outcome.has_value());
    } else {
      REQUIRE(r.p1.has_value());
      REQUIRE(r.cost.has_value());
      REQUIRE(r.embezzled.has_value());
      REQUIRE(r.investor_outcome.has_value());
      REQUIRE(r.investor_impulse.has_value());
      // The manager only experiences the rounds in which funds were taken.
      REQUIRE(r.manager_outcome.has_value() == *r.embezzled);
      if (!*r.embezzled) REQUIRE(manager_delta == 0);
    }
    investor = ia;
    manager = ma;
  }
}

TEST_CASE("diverted rounds are investor failures under the default rule") {
  engine::EpisodeConfig config = active_config();
  config.rounds = 500;
  const engine::Trajectory trajectory = engine::run_episode(config, 4321);
  std::uint64_t embezzled = 0;
  for (const engine::RoundRecord& r : trajectory.rounds) {
    if (r.embezzled.value_or(false)) {
      ++embezzled;
      REQUIRE(r.investor_outcome == Outcome::Failure);
    }
  }
  CHECK(embezzled > 0);
}

TEST_CASE("alternative loss rule spares the investor a failed diversion") {
  engine::EpisodeConfig config = active_config();
  config.success.loss_rule = engine::InvestorLossRule::FailureIfEmbezzleSucceeds;
  config.rounds = 2000;
  const engine::Trajectory trajectory = engine::run_episode(config, 987);
  std::uint64_t failed_diversions = 0;
  for (const engine::RoundRecord& r : trajectory.rounds) {
    if (r.embezzled.value_or(false)) {
      if (r.manager_outcome == Outcome::Failure) {
        ++failed_diversions;
        REQUIRE(r.investor_outcome == Outcome::Success);
      } else {
        REQUIRE(r.investor_outcome == Outcome::Failure);
      }
    }
  }
  CHECK(failed_diversions > 0);
}

TEST_CASE("recalled frequency converges to the base success rate without distortion") {
  const engine::EpisodeConfig config = honest_config(0.0, 10000);
  const engine::Trajectory trajectory = engine::run_episode(config, 555);
  std::uint64_t invested = 0;
  for (const engine::RoundRecord& r : trajectory.rounds) {
    if (r.fraction != InvestedFraction::None) ++invested;
  }
  REQUIRE(invested == 10000);
  const belief::MemoryCounts counts = trajectory.rounds.back().investor_counts_after;
  const double ratio = static_cast<double>(counts.successes) /
                       static_cast<double>(counts.successes + counts.failures);
  const double se = std::sqrt(0.6 * 0.4 / 10000.0);
  CHECK(std::abs(ratio - 0.6) <= 3.0 * se);
}

TEST_CASE("config fingerprints detect parameter changes") {
  const engine::EpisodeConfig base = active_config();
  engine::EpisodeConfig other = active_config();
  CHECK(base.fingerprint() == other.fingerprint());
  other.investor_gamma = 0.26;
  CHECK(base.fingerprint() != other.fingerprint());
  engine::EpisodeConfig different_rule = active_config();
  different_rule.success.loss_rule = engine::InvestorLossRule::FailureIfEmbezzleSucceeds;
  CHECK(base.fingerprint() != different_rule.fingerprint());
}

}  // TEST_SUITE
