#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riskgame/engine.hpp"
#include "riskgame/perception.hpp"

namespace riskgame::montecarlo {

// Brute-force estimate of the long-run recalled success ratio: samples
// outcomes from `frequencies`, impulses from `matrix`, files them through
// `recollection`, and returns the recorded-success share.  This is the
// independent sampling-path oracle for perception::asymptotic_confidence.
struct ConfidenceEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t recorded = 0;
  std::uint64_t successes = 0;
};

// Returns nullopt when no experience was recorded at all (the degenerate
// case).  Throws std::invalid_argument when n_samples < 1.
std::optional<ConfidenceEstimate> empirical_confidence_oracle(
    const perception::TrueFrequencies& frequencies,
    const perception::PerceptionMatrix& matrix,
    const perception::RecollectionProcess& recollection, std::uint64_t n_samples,
    std::uint64_t seed);

// Per-episode statistics, the unit of deterministic aggregation.
struct EpisodeSummary {
  std::uint64_t episode_index = 0;
  double final_p0 = 0.0;
  double final_p1 = 0.0;
  std::uint64_t total_rounds = 0;
  std::uint64_t invested_rounds = 0;
  std::uint64_t embezzled_rounds = 0;
  std::uint64_t fraction_thirds_total = 0;   // sum over all rounds, in thirds
  std::uint64_t investor_successes = 0;      // realized Success outcomes
};

struct AggregateStats {
  std::uint64_t episodes = 0;
  // Standard errors are NaN ("absent") when fewer than two episodes
  // contribute; rates conditioned on invested rounds are NaN when no episode
  // invested at all.
  double mean_p0 = 0.0, se_p0 = 0.0;
  double mean_p1 = 0.0, se_p1 = 0.0;
  double invest_rate = 0.0, se_invest_rate = 0.0;
  double mean_fraction = 0.0, se_mean_fraction = 0.0;
  double embezzle_rate = 0.0, se_embezzle_rate = 0.0;
  double success_freq = 0.0, se_success_freq = 0.0;
};

// Mergeable set of episode summaries.  merge() concatenates; finalize()
// aggregates over episodes sorted by index, so any grouping of the same
// episodes produces bit-identical aggregates regardless of completion order.
class ReplicationSet {
 public:
  void add(EpisodeSummary summary);
  void merge(const ReplicationSet& other);
  AggregateStats finalize() const;
  const std::vector<EpisodeSummary>& episodes() const { return episodes_; }

 private:
  std::vector<EpisodeSummary> episodes_;
};

EpisodeSummary summarize_episode(const engine::Trajectory& trajectory,
                                 const engine::EpisodeConfig& config,
                                 std::uint64_t episode_index);

// Runs one episode of the replication set; episode seeds derive as
// derive_seed(base_seed, {kDomainReplication, episode_index}).
EpisodeSummary run_single_episode(const engine::EpisodeConfig& config,
                                  std::uint64_t base_seed, std::uint64_t episode_index);

// Runs episodes [first_index, first_index + n).  Throws
// std::invalid_argument when n < 1.
ReplicationSet run_replication_set(const engine::EpisodeConfig& config, std::uint64_t n,
                                   std::uint64_t base_seed, std::uint64_t first_index = 0);

AggregateStats run_replications(const engine::EpisodeConfig& config, std::uint64_t n,
                                std::uint64_t base_seed);

// Sweepable knobs.  alpha_success is an alias for psi_base: under honest
// play the base success probability is the investor's true outcome
// frequency.
enum class SweepParameter {
  GammaInvestor,
  GammaManager,
  Mu,
  Mu1,
  Mu2,
  Mu3,
  PsiBase,
  AlphaSuccess,
  CostPoint,
};

std::string parameter_name(SweepParameter parameter);
// Throws ConfigError for an unknown name.
SweepParameter parse_parameter(const std::string& name);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::GammaInvestor;
  std::vector<double> grid;
  std::uint64_t replications = 1;
  std::uint64_t rounds = 1000;
  std::uint64_t base_seed = 0;
};

struct SweepRow {
  std::uint64_t point_index = 0;
  SweepParameter parameter = SweepParameter::GammaInvestor;
  double value = 0.0;
  AggregateStats stats;
  // Long-run recalled-confidence prediction for the investor under honest
  // play: asymptotic_confidence at this row's gamma and psi_base.
  double closed_form_confidence = 0.0;
};

// Applies one grid value to a config copy.  Throws ConfigError naming the
// violated constraint for out-of-range values or a parameter that does not
// match the configured policy/distribution shape.
engine::EpisodeConfig apply_parameter(const engine::EpisodeConfig& base,
                                      SweepParameter parameter, double value);

// One row per grid point, in grid order.  Every point draws its seeds from
// derive_seed(spec.base_seed, {kDomainSweepPoint, bits(value)}), keyed by the
// parameter value itself so reordering the grid reorders rows without
// changing any per-point result.  Throws ConfigError on an empty grid or an
// invalid grid value.
std::vector<SweepRow> sweep(const engine::EpisodeConfig& base, const SweepSpec& spec);

}  // namespace riskgame::montecarlo
