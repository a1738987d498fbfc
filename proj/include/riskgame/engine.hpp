#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "riskgame/agents.hpp"
#include "riskgame/belief.hpp"
#include "riskgame/perception.hpp"
#include "riskgame/rng.hpp"

namespace riskgame::engine {

// Coefficients of the default embezzlement-success law.
struct EmbezzleCoefficients {
  double c0 = 0.5;
  double c1 = 0.3;
  double c2 = 0.2;
};

// clamp(c0 + c1*p1 - c2*p0, 0, 1).  The more confident the manager, the more
// likely the diversion succeeds; a confident investor is assumed to watch
// the project more closely.  Throws std::invalid_argument when p0 or p1 is
// outside [0, 1].
double default_embezzle_success(double p0, double p1, const EmbezzleCoefficients& coeffs);

// What the investor observes when the manager diverts the funds.
enum class InvestorLossRule {
  AlwaysFailure,             // any diversion wastes the round for the investor
  FailureIfEmbezzleSucceeds  // a failed diversion leaves the investor a success
};

// Objective success probabilities for both strategies.
struct SuccessModel {
  // Base probability that an honestly run project succeeds.
  double psi_base = 0.6;
  EmbezzleCoefficients embezzle;
  // When enabled, the honest success probability is shifted by the
  // investor's own confidence: clamp(psi_base + gain * (p0 - 0.5), 0, 1).
  bool confidence_enhanced = false;
  double confidence_gain = 0.2;
  InvestorLossRule loss_rule = InvestorLossRule::AlwaysFailure;

  double project_success_probability(double p0) const;
  double embezzle_success_probability(double p0, double p1) const;

  // Throws std::invalid_argument on out-of-range psi_base or gain.
  void validate() const;
};

// Everything one agent carries between rounds.
struct PlayerState {
  belief::MemoryCounts counts;
  belief::BeliefParams belief;
  perception::PerceptionMatrix perception{0.0};
  perception::RecollectionProcess recollection = perception::default_recollection();
};

struct Policies {
  agents::InvestorPolicy investor = agents::AllOrNothingPolicy(0.7);
  agents::ManagerPolicy manager;
};

struct GameState {
  PlayerState investor;
  PlayerState manager;
};

// Trace of one round.  Manager-decision fields are present iff the round was
// invested; manager outcome fields are present iff the funds were diverted
// (an honest manager accrues no experience of strategy B).
struct RoundRecord {
  std::uint64_t round_index = 0;
  double p0 = 0.0;
  agents::InvestedFraction fraction = agents::InvestedFraction::None;
  std::optional<double> p1;
  std::optional<double> cost;
  std::optional<bool> embezzled;
  std::optional<perception::Outcome> investor_outcome;
  std::optional<perception::Outcome> manager_outcome;
  std::optional<perception::Impulse> investor_impulse;
  std::optional<perception::Impulse> manager_impulse;
  belief::MemoryCounts investor_counts_after;
  belief::MemoryCounts manager_counts_after;
};

struct Trajectory {
  std::uint64_t config_fingerprint = 0;
  std::uint64_t seed = 0;
  std::vector<RoundRecord> rounds;
};

// Per-round randomness: each stochastic field owns a channel, and each
// channel gets an independent substream derived from
// derive_seed(episode_seed, {kDomainRound, round_index, channel}).
enum class Channel : std::uint64_t {
  CostDraw = 1,
  HonestOutcome = 2,
  EmbezzleOutcome = 3,
  InvestorImpulse = 4,
  ManagerImpulse = 5,
  InvestorRecall = 6,
  ManagerRecall = 7,
};

class RoundRandomness {
 public:
  RoundRandomness(std::uint64_t episode_seed, std::uint64_t round_index)
      : episode_seed_(episode_seed), round_index_(round_index) {}

  RngStream stream(Channel channel) const {
    return RngStream(derive_seed(
        episode_seed_, {kDomainRound, round_index_, static_cast<std::uint64_t>(channel)}));
  }

 private:
  std::uint64_t episode_seed_;
  std::uint64_t round_index_;
};

// Executes one round in order: investor confidence, investment decision,
// then (only if funds were committed) manager confidence, cost draw,
// embezzlement decision, outcome realization, and perception-filtered memory
// updates for whoever experienced an outcome.
RoundRecord run_round(GameState& state, const Policies& policies,
                      const SuccessModel& model, const RoundRandomness& randomness);

// Full setup of one episode.
struct EpisodeConfig {
  belief::BeliefParams investor_belief;
  double investor_gamma = 0.0;
  agents::InvestorPolicy investor_policy = agents::AllOrNothingPolicy(0.7);
  belief::MemoryCounts investor_initial_counts;

  belief::BeliefParams manager_belief;
  double manager_gamma = 0.0;
  agents::CostDistribution manager_cost = agents::UniformCost{};
  belief::MemoryCounts manager_initial_counts;

  SuccessModel success;
  std::uint64_t rounds = 1000;

  // Throws std::invalid_argument / ConfigError on any violated constraint.
  void validate() const;

  // Stable 64-bit hash of every parameter above; equal configs hash equal.
  std::uint64_t fingerprint() const;
};

// Runs `config.rounds` rounds from the configured initial state.
// Deterministic given (config, seed).
Trajectory run_episode(const EpisodeConfig& config, std::uint64_t seed);

}  // namespace riskgame::engine
