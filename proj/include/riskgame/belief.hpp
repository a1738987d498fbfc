#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace riskgame::belief {

// Pseudo-counts of the Laplace-smoothed frequency estimator.  Both priors
// must be strictly positive; that is what keeps confidence inside (0, 1)
// even with an empty memory.
struct BeliefParams {
  double prior_success = 1.0;
  double prior_failure = 1.0;
};

// Success/failure tallies a player actually recalls.
struct MemoryCounts {
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;

  bool operator==(const MemoryCounts&) const = default;
};

// Confidence in a successful outcome given remembered counts:
//
//   (s + prior_success) / (s + f + prior_success + prior_failure)
//
// Real-valued counts are accepted so expected counts can be fed through the
// same formula; episode memory itself stores integers.
// Throws std::invalid_argument on non-positive priors or negative counts.
double confidence(double successes, double failures, const BeliefParams& params);
double confidence(const MemoryCounts& counts, const BeliefParams& params);

// Pluggable signature for alternative confidence-formation rules.
using ConfidenceFunction =
    std::function<double(const MemoryCounts&, const BeliefParams&)>;

struct AxiomCheck {
  bool passed = false;
  // How badly the axiom was violated; 0 when it holds.
  double worst_violation = 0.0;
};

// Numeric verification of the three confidence axioms over a finite grid:
//   1. bounds:    0 < confidence < 1 for all s, f in [0, min(f_max, 1000)]
//   2. monotone:  strictly increasing in s, strictly decreasing in f
//   3. limit:     |confidence(round(a*f), f) - a/(a+1)| <= 2/f for every
//                 f in [1, f_max], with a non-increasing error envelope
//                 across octaves of f and the final deviation at f_max
//                 below limit_tolerance = 2/f_max.
struct AxiomReport {
  AxiomCheck bounds;
  AxiomCheck monotone;
  AxiomCheck limit;
  double limit_tolerance = 0.0;
  // Deviation |confidence(round(a*f_max), f_max) - a/(a+1)| per ratio a.
  std::vector<std::pair<double, double>> final_deviation_by_a;

  bool all_passed() const {
    return bounds.passed && monotone.passed && limit.passed;
  }
};

// Throws std::invalid_argument when params are invalid, a_values is empty,
// any a is non-positive, or f_max < 1.
AxiomReport verify_axioms(const BeliefParams& params,
                          const std::vector<double>& a_values,
                          std::uint64_t f_max);

}  // namespace riskgame::belief
