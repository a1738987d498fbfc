#include "riskgame/perception.hpp"

#include <stdexcept>
#include <string>

#include "riskgame/errors.hpp"

namespace riskgame::perception {

PerceptionMatrix::PerceptionMatrix(double gamma) : gamma_(gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma must lie in [0, 1], got " + std::to_string(gamma));
  }
}

double PerceptionMatrix::probability(Outcome outcome, Impulse impulse) const {
  if (outcome == Outcome::Success) {
    return impulse == Impulse::Normal ? 1.0 : 0.0;
  }
  return impulse == Impulse::Normal ? 1.0 - gamma_ : gamma_;
}

RecollectionProcess::RecollectionProcess(const Weights& weights) : weights_(weights) {
  for (double w : weights) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw std::invalid_argument("recollection weights must lie in [0, 1], got " +
                                  std::to_string(w));
    }
  }
  for (Outcome outcome : {Outcome::Success, Outcome::Failure}) {
    for (Impulse impulse : {Impulse::Normal, Impulse::Misattributed}) {
      const double total = weights_[index(outcome, impulse, Bucket::Success)] +
                           weights_[index(outcome, impulse, Bucket::Failure)];
      if (total > 1.0) {
        throw std::invalid_argument(
            "bucket weights for one experience must sum to <= 1, got " +
            std::to_string(total));
      }
    }
  }
}

double RecollectionProcess::weight(Outcome outcome, Impulse impulse, Bucket bucket) const {
  return weights_[index(outcome, impulse, bucket)];
}

RecollectionProcess default_recollection() {
  RecollectionProcess::Weights weights{};
  weights[RecollectionProcess::index(Outcome::Success, Impulse::Normal, Bucket::Success)] = 1.0;
  weights[RecollectionProcess::index(Outcome::Failure, Impulse::Normal, Bucket::Failure)] = 1.0;
  return RecollectionProcess(weights);
}

TrueFrequencies::TrueFrequencies(double p_success)
    : success_(p_success), failure_(1.0 - p_success) {
  if (!(p_success >= 0.0 && p_success <= 1.0)) {
    throw std::invalid_argument("p_success must lie in [0, 1], got " +
                                std::to_string(p_success));
  }
}

Impulse sample_impulse(Outcome outcome, const PerceptionMatrix& matrix, RngStream& rng) {
  const double p_normal = matrix.probability(outcome, Impulse::Normal);
  return rng.next_uniform() < p_normal ? Impulse::Normal : Impulse::Misattributed;
}

belief::MemoryCounts record_experience(const belief::MemoryCounts& counts,
                                       const Experience& experience,
                                       const RecollectionProcess& recollection,
                                       RngStream& rng) {
  const double w_success =
      recollection.weight(experience.outcome, experience.impulse, Bucket::Success);
  const double w_failure =
      recollection.weight(experience.outcome, experience.impulse, Bucket::Failure);
  const double u = rng.next_uniform();
  belief::MemoryCounts updated = counts;
  if (u < w_success) {
    updated.successes += 1;
  } else if (u < w_success + w_failure) {
    updated.failures += 1;
  }
  return updated;
}

double expected_count(const PerceptionMatrix& matrix,
                      const RecollectionProcess& recollection,
                      const TrueFrequencies& frequencies, Bucket bucket) {
  double total = 0.0;
  for (Outcome outcome : {Outcome::Success, Outcome::Failure}) {
    const double alpha =
        outcome == Outcome::Success ? frequencies.success() : frequencies.failure();
    for (Impulse impulse : {Impulse::Normal, Impulse::Misattributed}) {
      total += recollection.weight(outcome, impulse, bucket) *
               matrix.probability(outcome, impulse) * alpha;
    }
  }
  return total;
}

double asymptotic_confidence(const PerceptionMatrix& matrix,
                             const RecollectionProcess& recollection,
                             const TrueFrequencies& frequencies) {
  const double expected_successes = expected_count(matrix, recollection, frequencies, Bucket::Success);
  const double expected_failures = expected_count(matrix, recollection, frequencies, Bucket::Failure);
  const double total = expected_successes + expected_failures;
  if (total <= 0.0) {
    throw DegenerateModelError(
        "no experience is ever recorded: expected success and failure counts are both zero");
  }
  return expected_successes / total;
}

}  // namespace riskgame::perception
