#include "riskgame/engine.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "riskgame/errors.hpp"

namespace riskgame::engine {

namespace {

void check_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(value));
  }
}

// FNV-1a over the canonical byte encoding of the config fields.
class Fnv1a {
 public:
  void add_u64(std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      hash_ = (hash_ ^ ((value >> (8 * i)) & 0xffULL)) * 0x100000001b3ULL;
    }
  }
  void add_double(double value) {
    // Normalize -0.0 so numerically equal configs hash equal.
    if (value == 0.0) value = 0.0;
    add_u64(std::bit_cast<std::uint64_t>(value));
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

double default_embezzle_success(double p0, double p1, const EmbezzleCoefficients& coeffs) {
  check_probability(p0, "p0");
  check_probability(p1, "p1");
  return std::clamp(coeffs.c0 + coeffs.c1 * p1 - coeffs.c2 * p0, 0.0, 1.0);
}

double SuccessModel::project_success_probability(double p0) const {
  if (!confidence_enhanced) {
    return psi_base;
  }
  return std::clamp(psi_base + confidence_gain * (p0 - 0.5), 0.0, 1.0);
}

double SuccessModel::embezzle_success_probability(double p0, double p1) const {
  return default_embezzle_success(p0, p1, embezzle);
}

void SuccessModel::validate() const {
  check_probability(psi_base, "psi_base");
  if (!(confidence_gain >= 0.0)) {
    throw std::invalid_argument("confidence_gain must be >= 0, got " +
                                std::to_string(confidence_gain));
  }
}

RoundRecord run_round(GameState& state, const Policies& policies,
                      const SuccessModel& model, const RoundRandomness& randomness) {
  RoundRecord record;
  record.p0 = belief::confidence(state.investor.counts, state.investor.belief);
  record.fraction = agents::decide_investment(record.p0, policies.investor);
  if (record.fraction == agents::InvestedFraction::None) {
    record.investor_counts_after = state.investor.counts;
    record.manager_counts_after = state.manager.counts;
    return record;
  }

  const double p1 = belief::confidence(state.manager.counts, state.manager.belief);
  record.p1 = p1;
  RngStream cost_stream = randomness.stream(Channel::CostDraw);
  const double h = agents::draw_cost(policies.manager, cost_stream);
  record.cost = h;
  const bool embezzled = agents::decide_embezzlement(p1, h);
  record.embezzled = embezzled;

  perception::Outcome investor_outcome;
  if (embezzled) {
    const double success_p = model.embezzle_success_probability(record.p0, p1);
    RngStream outcome_stream = randomness.stream(Channel::EmbezzleOutcome);
    const perception::Outcome manager_outcome = outcome_stream.next_bernoulli(success_p)
                                                    ? perception::Outcome::Success
                                                    : perception::Outcome::Failure;
    record.manager_outcome = manager_outcome;

    if (model.loss_rule == InvestorLossRule::AlwaysFailure) {
      investor_outcome = perception::Outcome::Failure;
    } else {
      investor_outcome = manager_outcome == perception::Outcome::Success
                             ? perception::Outcome::Failure
                             : perception::Outcome::Success;
    }

    RngStream impulse_stream = randomness.stream(Channel::ManagerImpulse);
    const perception::Impulse manager_impulse =
        perception::sample_impulse(manager_outcome, state.manager.perception, impulse_stream);
    record.manager_impulse = manager_impulse;
    RngStream recall_stream = randomness.stream(Channel::ManagerRecall);
    state.manager.counts = perception::record_experience(
        state.manager.counts, {manager_outcome, manager_impulse},
        state.manager.recollection, recall_stream);
  } else {
    const double success_p = model.project_success_probability(record.p0);
    RngStream outcome_stream = randomness.stream(Channel::HonestOutcome);
    investor_outcome = outcome_stream.next_bernoulli(success_p)
                           ? perception::Outcome::Success
                           : perception::Outcome::Failure;
  }

  record.investor_outcome = investor_outcome;
  RngStream impulse_stream = randomness.stream(Channel::InvestorImpulse);
  const perception::Impulse investor_impulse =
      perception::sample_impulse(investor_outcome, state.investor.perception, impulse_stream);
  record.investor_impulse = investor_impulse;
  RngStream recall_stream = randomness.stream(Channel::InvestorRecall);
  state.investor.counts = perception::record_experience(
      state.investor.counts, {investor_outcome, investor_impulse},
      state.investor.recollection, recall_stream);

  record.investor_counts_after = state.investor.counts;
  record.manager_counts_after = state.manager.counts;
  return record;
}

void EpisodeConfig::validate() const {
  if (!(investor_belief.prior_success > 0.0) || !(investor_belief.prior_failure > 0.0)) {
    throw std::invalid_argument("investor belief priors must be > 0");
  }
  if (!(manager_belief.prior_success > 0.0) || !(manager_belief.prior_failure > 0.0)) {
    throw std::invalid_argument("manager belief priors must be > 0");
  }
  perception::PerceptionMatrix investor_matrix(investor_gamma);
  perception::PerceptionMatrix manager_matrix(manager_gamma);
  (void)investor_matrix;
  (void)manager_matrix;
  agents::validate(manager_cost);
  success.validate();
  if (rounds < 1) {
    throw std::invalid_argument("rounds must be >= 1, got " + std::to_string(rounds));
  }
}

std::uint64_t EpisodeConfig::fingerprint() const {
  Fnv1a hash;
  hash.add_double(investor_belief.prior_success);
  hash.add_double(investor_belief.prior_failure);
  hash.add_double(investor_gamma);
  if (const auto* all = std::get_if<agents::AllOrNothingPolicy>(&investor_policy)) {
    hash.add_u64(1);
    hash.add_double(all->mu());
  } else {
    const auto& tiered = std::get<agents::TieredPolicy>(investor_policy);
    hash.add_u64(2);
    hash.add_double(tiered.mu1());
    hash.add_double(tiered.mu2());
    hash.add_double(tiered.mu3());
  }
  hash.add_u64(investor_initial_counts.successes);
  hash.add_u64(investor_initial_counts.failures);

  hash.add_double(manager_belief.prior_success);
  hash.add_double(manager_belief.prior_failure);
  hash.add_double(manager_gamma);
  if (std::holds_alternative<agents::UniformCost>(manager_cost)) {
    hash.add_u64(1);
  } else if (const auto* point = std::get_if<agents::PointMassCost>(&manager_cost)) {
    hash.add_u64(2);
    hash.add_double(point->value);
  } else {
    const auto& beta = std::get<agents::BetaCost>(manager_cost);
    hash.add_u64(3);
    hash.add_double(beta.alpha);
    hash.add_double(beta.beta);
  }
  hash.add_u64(manager_initial_counts.successes);
  hash.add_u64(manager_initial_counts.failures);

  hash.add_double(success.psi_base);
  hash.add_double(success.embezzle.c0);
  hash.add_double(success.embezzle.c1);
  hash.add_double(success.embezzle.c2);
  hash.add_u64(success.confidence_enhanced ? 1 : 0);
  hash.add_double(success.confidence_gain);
  hash.add_u64(success.loss_rule == InvestorLossRule::AlwaysFailure ? 0 : 1);
  hash.add_u64(rounds);
  return hash.value();
}

Trajectory run_episode(const EpisodeConfig& config, std::uint64_t seed) {
  config.validate();

  GameState state{
      PlayerState{config.investor_initial_counts, config.investor_belief,
                  perception::PerceptionMatrix(config.investor_gamma),
                  perception::default_recollection()},
      PlayerState{config.manager_initial_counts, config.manager_belief,
                  perception::PerceptionMatrix(config.manager_gamma),
                  perception::default_recollection()},
  };
  Policies policies{config.investor_policy, agents::ManagerPolicy{config.manager_cost}};

  Trajectory trajectory;
  trajectory.config_fingerprint = config.fingerprint();
  trajectory.seed = seed;
  trajectory.rounds.reserve(config.rounds);
  for (std::uint64_t t = 0; t < config.rounds; ++t) {
    RoundRecord record = run_round(state, policies, config.success, RoundRandomness(seed, t));
    record.round_index = t;
    trajectory.rounds.push_back(record);
  }
  return trajectory;
}

}  // namespace riskgame::engine
