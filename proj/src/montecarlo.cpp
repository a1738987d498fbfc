#include "riskgame/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "riskgame/errors.hpp"

namespace riskgame::montecarlo {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct MeanSe {
  double mean = kNaN;
  double se = kNaN;
};

// Mean and normal-approximation standard error over the values; SE is NaN
// below two samples.
MeanSe mean_and_se(const std::vector<double>& values) {
  MeanSe result;
  if (values.empty()) return result;
  double sum = 0.0;
  for (double v : values) sum += v;
  result.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return result;
  double sq = 0.0;
  for (double v : values) {
    const double d = v - result.mean;
    sq += d * d;
  }
  const double variance = sq / static_cast<double>(values.size() - 1);
  result.se = std::sqrt(variance / static_cast<double>(values.size()));
  return result;
}

std::uint64_t value_bits(double value) {
  if (value == 0.0) value = 0.0;  // fold -0.0 into +0.0
  return std::bit_cast<std::uint64_t>(value);
}

}  // namespace

std::optional<ConfidenceEstimate> empirical_confidence_oracle(
    const perception::TrueFrequencies& frequencies,
    const perception::PerceptionMatrix& matrix,
    const perception::RecollectionProcess& recollection, std::uint64_t n_samples,
    std::uint64_t seed) {
  if (n_samples < 1) {
    throw std::invalid_argument("n_samples must be >= 1");
  }
  RngStream rng(seed);
  belief::MemoryCounts counts;
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    const perception::Outcome outcome = rng.next_bernoulli(frequencies.success())
                                            ? perception::Outcome::Success
                                            : perception::Outcome::Failure;
    const perception::Impulse impulse = perception::sample_impulse(outcome, matrix, rng);
    counts = perception::record_experience(counts, {outcome, impulse}, recollection, rng);
  }
  const std::uint64_t recorded = counts.successes + counts.failures;
  if (recorded == 0) {
    return std::nullopt;
  }
  ConfidenceEstimate estimate;
  estimate.recorded = recorded;
  estimate.successes = counts.successes;
  estimate.estimate = static_cast<double>(counts.successes) / static_cast<double>(recorded);
  estimate.standard_error = std::sqrt(estimate.estimate * (1.0 - estimate.estimate) /
                                      static_cast<double>(recorded));
  return estimate;
}

void ReplicationSet::add(EpisodeSummary summary) { episodes_.push_back(summary); }

void ReplicationSet::merge(const ReplicationSet& other) {
  episodes_.insert(episodes_.end(), other.episodes_.begin(), other.episodes_.end());
}

AggregateStats ReplicationSet::finalize() const {
  std::vector<EpisodeSummary> ordered = episodes_;
  std::sort(ordered.begin(), ordered.end(),
            [](const EpisodeSummary& a, const EpisodeSummary& b) {
              return a.episode_index < b.episode_index;
            });

  AggregateStats stats;
  stats.episodes = ordered.size();
  std::vector<double> p0s, p1s, invest_rates, fractions, embezzle_rates, success_freqs;
  for (const EpisodeSummary& e : ordered) {
    p0s.push_back(e.final_p0);
    p1s.push_back(e.final_p1);
    const double rounds = static_cast<double>(e.total_rounds);
    invest_rates.push_back(static_cast<double>(e.invested_rounds) / rounds);
    fractions.push_back(static_cast<double>(e.fraction_thirds_total) / (3.0 * rounds));
    if (e.invested_rounds > 0) {
      const double invested = static_cast<double>(e.invested_rounds);
      embezzle_rates.push_back(static_cast<double>(e.embezzled_rounds) / invested);
      success_freqs.push_back(static_cast<double>(e.investor_successes) / invested);
    }
  }
  const MeanSe p0 = mean_and_se(p0s);
  const MeanSe p1 = mean_and_se(p1s);
  const MeanSe invest = mean_and_se(invest_rates);
  const MeanSe fraction = mean_and_se(fractions);
  const MeanSe embezzle = mean_and_se(embezzle_rates);
  const MeanSe success = mean_and_se(success_freqs);
  stats.mean_p0 = p0.mean;
  stats.se_p0 = p0.se;
  stats.mean_p1 = p1.mean;
  stats.se_p1 = p1.se;
  stats.invest_rate = invest.mean;
  stats.se_invest_rate = invest.se;
  stats.mean_fraction = fraction.mean;
  stats.se_mean_fraction = fraction.se;
  stats.embezzle_rate = embezzle.mean;
  stats.se_embezzle_rate = embezzle.se;
  stats.success_freq = success.mean;
  stats.se_success_freq = success.se;
  return stats;
}

EpisodeSummary summarize_episode(const engine::Trajectory& trajectory,
                                 const engine::EpisodeConfig& config,
                                 std::uint64_t episode_index) {
  EpisodeSummary summary;
  summary.episode_index = episode_index;
  summary.total_rounds = trajectory.rounds.size();
  for (const engine::RoundRecord& record : trajectory.rounds) {
    summary.fraction_thirds_total += static_cast<std::uint64_t>(agents::thirds(record.fraction));
    if (record.fraction != agents::InvestedFraction::None) {
      summary.invested_rounds += 1;
      if (record.embezzled.value_or(false)) summary.embezzled_rounds += 1;
      if (record.investor_outcome == perception::Outcome::Success) {
        summary.investor_successes += 1;
      }
    }
  }
  const belief::MemoryCounts investor_counts = trajectory.rounds.empty()
                                                   ? config.investor_initial_counts
                                                   : trajectory.rounds.back().investor_counts_after;
  const belief::MemoryCounts manager_counts = trajectory.rounds.empty()
                                                  ? config.manager_initial_counts
                                                  : trajectory.rounds.back().manager_counts_after;
  summary.final_p0 = belief::confidence(investor_counts, config.investor_belief);
  summary.final_p1 = belief::confidence(manager_counts, config.manager_belief);
  return summary;
}

EpisodeSummary run_single_episode(const engine::EpisodeConfig& config,
                                  std::uint64_t base_seed, std::uint64_t episode_index) {
  const std::uint64_t episode_seed =
      derive_seed(base_seed, {kDomainReplication, episode_index});
  const engine::Trajectory trajectory = engine::run_episode(config, episode_seed);
  return summarize_episode(trajectory, config, episode_index);
}

ReplicationSet run_replication_set(const engine::EpisodeConfig& config, std::uint64_t n,
                                   std::uint64_t base_seed, std::uint64_t first_index) {
  if (n < 1) {
    throw std::invalid_argument("replications must be >= 1");
  }
  ReplicationSet set;
  for (std::uint64_t i = 0; i < n; ++i) {
    set.add(run_single_episode(config, base_seed, first_index + i));
  }
  return set;
}

AggregateStats run_replications(const engine::EpisodeConfig& config, std::uint64_t n,
                                std::uint64_t base_seed) {
  return run_replication_set(config, n, base_seed).finalize();
}

std::string parameter_name(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::GammaInvestor: return "gamma_investor";
    case SweepParameter::GammaManager: return "gamma_manager";
    case SweepParameter::Mu: return "mu";
    case SweepParameter::Mu1: return "mu1";
    case SweepParameter::Mu2: return "mu2";
    case SweepParameter::Mu3: return "mu3";
    case SweepParameter::PsiBase: return "psi_base";
    case SweepParameter::AlphaSuccess: return "alpha_success";
    case SweepParameter::CostPoint: return "cost_point";
  }
  return "unknown";
}

SweepParameter parse_parameter(const std::string& name) {
  for (SweepParameter p :
       {SweepParameter::GammaInvestor, SweepParameter::GammaManager, SweepParameter::Mu,
        SweepParameter::Mu1, SweepParameter::Mu2, SweepParameter::Mu3,
        SweepParameter::PsiBase, SweepParameter::AlphaSuccess, SweepParameter::CostPoint}) {
    if (parameter_name(p) == name) return p;
  }
  throw ConfigError("unknown sweep parameter '" + name +
                    "'; expected one of gamma_investor, gamma_manager, mu, mu1, mu2, "
                    "mu3, psi_base, alpha_success, cost_point");
}

engine::EpisodeConfig apply_parameter(const engine::EpisodeConfig& base,
                                      SweepParameter parameter, double value) {
  engine::EpisodeConfig config = base;
  try {
    switch (parameter) {
      case SweepParameter::GammaInvestor:
        (void)perception::PerceptionMatrix(value);
        config.investor_gamma = value;
        break;
      case SweepParameter::GammaManager:
        (void)perception::PerceptionMatrix(value);
        config.manager_gamma = value;
        break;
      case SweepParameter::Mu:
        if (!std::holds_alternative<agents::AllOrNothingPolicy>(base.investor_policy)) {
          throw ConfigError("sweeping mu requires an all_or_nothing investor policy");
        }
        config.investor_policy = agents::AllOrNothingPolicy(value);
        break;
      case SweepParameter::Mu1:
      case SweepParameter::Mu2:
      case SweepParameter::Mu3: {
        const auto* tiered = std::get_if<agents::TieredPolicy>(&base.investor_policy);
        if (tiered == nullptr) {
          throw ConfigError("sweeping tier thresholds requires a tiered investor policy");
        }
        double mu1 = tiered->mu1(), mu2 = tiered->mu2(), mu3 = tiered->mu3();
        if (parameter == SweepParameter::Mu1) mu1 = value;
        if (parameter == SweepParameter::Mu2) mu2 = value;
        if (parameter == SweepParameter::Mu3) mu3 = value;
        config.investor_policy = agents::TieredPolicy(mu1, mu2, mu3);
        break;
      }
      case SweepParameter::PsiBase:
      case SweepParameter::AlphaSuccess:
        config.success.psi_base = value;
        config.success.validate();
        break;
      case SweepParameter::CostPoint:
        if (!std::holds_alternative<agents::PointMassCost>(base.manager_cost)) {
          throw ConfigError("sweeping cost_point requires a point_mass cost distribution");
        }
        config.manager_cost = agents::PointMassCost{value};
        agents::validate(config.manager_cost);
        break;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError("grid value " + std::to_string(value) + " for " +
                      parameter_name(parameter) + " is invalid: " + e.what());
  }
  return config;
}

std::vector<SweepRow> sweep(const engine::EpisodeConfig& base, const SweepSpec& spec) {
  if (spec.grid.empty()) {
    throw ConfigError("sweep grid must not be empty");
  }
  if (spec.replications < 1) {
    throw ConfigError("sweep replications must be >= 1");
  }

  std::vector<SweepRow> rows;
  rows.reserve(spec.grid.size());
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    const double value = spec.grid[i];
    engine::EpisodeConfig config = apply_parameter(base, spec.parameter, value);
    config.rounds = spec.rounds;
    config.validate();

    SweepRow row;
    row.point_index = i;
    row.parameter = spec.parameter;
    row.value = value;
    const std::uint64_t point_seed =
        derive_seed(spec.base_seed, {kDomainSweepPoint, value_bits(value)});
    row.stats = run_replications(config, spec.replications, point_seed);
    row.closed_form_confidence = perception::asymptotic_confidence(
        perception::PerceptionMatrix(config.investor_gamma), perception::default_recollection(),
        perception::TrueFrequencies(config.success.psi_base));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace riskgame::montecarlo
