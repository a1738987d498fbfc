#pragma once

#include <array>
#include <cstddef>

#include "riskgame/belief.hpp"
#include "riskgame/rng.hpp"

namespace riskgame::perception {

// True result of a risky action.
enum class Outcome { Success, Failure };

// Signal the agent perceives after an outcome.  A Misattributed outcome is
// written off to abnormal circumstances and never enters memory counts.
enum class Impulse { Normal, Misattributed };

// Memory bucket an experience may be filed under.
enum class Bucket { Success, Failure };

// Row-stochastic 2x2 distortion matrix.  Successes are always perceived
// correctly; a failure is misattributed with probability gamma:
//
//               Normal     Misattributed
//   Success        1             0
//   Failure    1 - gamma       gamma
class PerceptionMatrix {
 public:
  // Throws std::invalid_argument unless gamma is in [0, 1].
  explicit PerceptionMatrix(double gamma);

  double gamma() const { return gamma_; }
  double probability(Outcome outcome, Impulse impulse) const;

 private:
  double gamma_;
};

// One lived event: what actually happened and how it was perceived.
struct Experience {
  Outcome outcome;
  Impulse impulse;
};

// Probability that a given experience is filed under a given memory bucket.
// For each (outcome, impulse) the bucket weights must sum to at most 1: an
// experience enters at most one count.
class RecollectionProcess {
 public:
  using Weights = std::array<double, 8>;

  // Throws std::invalid_argument when any weight is outside [0, 1] or a
  // bucket pair sums above 1.
  explicit RecollectionProcess(const Weights& weights);

  double weight(Outcome outcome, Impulse impulse, Bucket bucket) const;

  static constexpr std::size_t index(Outcome outcome, Impulse impulse, Bucket bucket) {
    return (static_cast<std::size_t>(outcome) * 2 + static_cast<std::size_t>(impulse)) * 2 +
           static_cast<std::size_t>(bucket);
  }

 private:
  Weights weights_;
};

// The indicator recollection rule: a Normal-impulse success is counted as a
// success, a Normal-impulse failure as a failure, and misattributed
// experiences are discarded entirely.
RecollectionProcess default_recollection();

// Objective outcome distribution generating experiences.
class TrueFrequencies {
 public:
  // Throws std::invalid_argument unless p_success is in [0, 1].
  explicit TrueFrequencies(double p_success);

  double success() const { return success_; }
  double failure() const { return failure_; }

 private:
  double success_;
  double failure_;
};

// Draws the perceived impulse for a realized outcome.  Consumes exactly one
// uniform draw.
Impulse sample_impulse(Outcome outcome, const PerceptionMatrix& matrix, RngStream& rng);

// Files one experience into memory: the success count is incremented with
// probability g(exp -> Success), else the failure count with probability
// g(exp -> Failure), else the counts are unchanged.  Consumes exactly one
// uniform draw; with default_recollection the result is deterministic.
belief::MemoryCounts record_experience(const belief::MemoryCounts& counts,
                                       const Experience& experience,
                                       const RecollectionProcess& recollection,
                                       RngStream& rng);

// Expected number of experiences filed under `bucket` per generated
// experience:  sum over (x, y) of g((x,y) -> bucket) * u[x,y] * alpha_x.
double expected_count(const PerceptionMatrix& matrix,
                      const RecollectionProcess& recollection,
                      const TrueFrequencies& frequencies, Bucket bucket);

// Long-run confidence implied by distorted recall:
//
//   E[success count] / (E[success count] + E[failure count])
//
// Serves both agents; their formulas are structurally identical.  Throws
// DegenerateModelError when nothing can ever be recorded (both expected
// counts zero).
double asymptotic_confidence(const PerceptionMatrix& matrix,
                             const RecollectionProcess& recollection,
                             const TrueFrequencies& frequencies);

}  // namespace riskgame::perception
