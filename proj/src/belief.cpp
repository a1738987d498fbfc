#include "riskgame/belief.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace riskgame::belief {

namespace {

void check_params(const BeliefParams& params) {
  if (!(params.prior_success > 0.0)) {
    throw std::invalid_argument("prior_success must be > 0, got " +
                                std::to_string(params.prior_success));
  }
  if (!(params.prior_failure > 0.0)) {
    throw std::invalid_argument("prior_failure must be > 0, got " +
                                std::to_string(params.prior_failure));
  }
}

}  // namespace

double confidence(double successes, double failures, const BeliefParams& params) {
  check_params(params);
  if (!(successes >= 0.0) || !(failures >= 0.0)) {
    throw std::invalid_argument("memory counts must be >= 0");
  }
  const double s = successes + params.prior_success;
  const double total = successes + failures + params.prior_success + params.prior_failure;
  return s / total;
}

double confidence(const MemoryCounts& counts, const BeliefParams& params) {
  return confidence(static_cast<double>(counts.successes),
                    static_cast<double>(counts.failures), params);
}

AxiomReport verify_axioms(const BeliefParams& params,
                          const std::vector<double>& a_values,
                          std::uint64_t f_max) {
  check_params(params);
  if (a_values.empty()) {
    throw std::invalid_argument("a_values must not be empty");
  }
  for (double a : a_values) {
    if (!(a > 0.0)) {
      throw std::invalid_argument("limit ratios must be > 0, got " + std::to_string(a));
    }
  }
  if (f_max < 1) {
    throw std::invalid_argument("f_max must be >= 1");
  }

  AxiomReport report;
  report.limit_tolerance = 2.0 / static_cast<double>(f_max);

  // Axioms 1 and 2 over the integer grid [0, f_max]^2.  The grid is capped
  // so a large f_max (used for the limit axiom) does not turn the quadratic
  // scan into the dominant cost.
  const std::uint64_t grid_max = std::min<std::uint64_t>(f_max, 1000);
  report.bounds.passed = true;
  report.monotone.passed = true;
  for (std::uint64_t s = 0; s <= grid_max; ++s) {
    for (std::uint64_t f = 0; f <= grid_max; ++f) {
      const double b = confidence(static_cast<double>(s), static_cast<double>(f), params);
      const double outside = std::max(0.0 - b, b - 1.0);
      if (!(b > 0.0 && b < 1.0)) {
        report.bounds.passed = false;
      }
      report.bounds.worst_violation = std::max(report.bounds.worst_violation, outside);

      const double up = confidence(static_cast<double>(s + 1), static_cast<double>(f), params);
      const double down = confidence(static_cast<double>(s), static_cast<double>(f + 1), params);
      const double violation = std::max(b - up, down - b);
      if (!(up > b && down < b)) {
        report.monotone.passed = false;
      }
      report.monotone.worst_violation = std::max(report.monotone.worst_violation, violation);
    }
  }

  // Axiom 3: convergence of confidence(round(a*f), f) to a/(a+1).  The
  // rounding of a*f jitters the pointwise deviation, so the "error shrinks
  // with f" requirement is checked on octave maxima rather than pointwise.
  report.limit.passed = true;
  for (double a : a_values) {
    const double target = a / (a + 1.0);
    double prev_octave_max = -1.0;
    double octave_max = 0.0;
    std::uint64_t octave_end = 2;  // current octave is [f, octave_end)
    double final_deviation = 0.0;
    for (std::uint64_t f = 1; f <= f_max; ++f) {
      const double s = std::round(a * static_cast<double>(f));
      const double dev = std::abs(confidence(s, static_cast<double>(f), params) - target);
      final_deviation = dev;
      const double bound = 2.0 / static_cast<double>(f);
      if (dev > bound) {
        report.limit.passed = false;
        report.limit.worst_violation = std::max(report.limit.worst_violation, dev - bound);
      }
      octave_max = std::max(octave_max, dev);
      if (f + 1 == octave_end || f == f_max) {
        if (prev_octave_max >= 0.0 && octave_max > prev_octave_max) {
          report.limit.passed = false;
          report.limit.worst_violation =
              std::max(report.limit.worst_violation, octave_max - prev_octave_max);
        }
        prev_octave_max = octave_max;
        octave_max = 0.0;
        octave_end *= 2;
      }
    }
    if (final_deviation > report.limit_tolerance) {
      report.limit.passed = false;
      report.limit.worst_violation = std::max(
          report.limit.worst_violation, final_deviation - report.limit_tolerance);
    }
    report.final_deviation_by_a.emplace_back(a, final_deviation);
  }

  return report;
}

}  // namespace riskgame::belief
