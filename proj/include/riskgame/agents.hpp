#pragma once

#include <cstdint>
#include <variant>

#include "riskgame/rng.hpp"

namespace riskgame::agents {

// Share of available funds committed in one round.  Stored in thirds so the
// four legal values stay exact.
enum class InvestedFraction : int { None = 0, Third = 1, TwoThirds = 2, All = 3 };

inline int thirds(InvestedFraction f) { return static_cast<int>(f); }
inline double fraction_value(InvestedFraction f) { return static_cast<int>(f) / 3.0; }

// Single-threshold rule: invest everything when confidence reaches mu.
class AllOrNothingPolicy {
 public:
  // Throws std::invalid_argument unless mu is in (0.5; 1].
  explicit AllOrNothingPolicy(double mu);
  double mu() const { return mu_; }

 private:
  double mu_;
};

// Three-threshold rule mapping confidence to {0, 1/3, 2/3, 1}.
// mu1 in (0.5; 0.65], mu2 in (0.65; 0.8], mu3 in (0.8; 1].
class TieredPolicy {
 public:
  // Throws std::invalid_argument when a threshold leaves its interval.
  TieredPolicy(double mu1, double mu2, double mu3);
  double mu1() const { return mu1_; }
  double mu2() const { return mu2_; }
  double mu3() const { return mu3_; }

 private:
  double mu1_;
  double mu2_;
  double mu3_;
};

using InvestorPolicy = std::variant<AllOrNothingPolicy, TieredPolicy>;

// Threshold comparisons are inclusive at the lower bound:
//   all-or-nothing:  1 iff p0 >= mu, else 0
//   tiered:          0 below mu1, 1/3 in [mu1, mu2), 2/3 in [mu2, mu3),
//                    1 at and above mu3
// Throws std::invalid_argument when p0 is outside [0, 1].
InvestedFraction decide_investment(double p0, const InvestorPolicy& policy);

// Cost of an embezzlement attempt, drawn fresh each round from [0, 1].
struct UniformCost {};

struct PointMassCost {
  double value = 0.5;
};

struct BetaCost {
  double alpha = 1.0;
  double beta = 1.0;
};

using CostDistribution = std::variant<UniformCost, PointMassCost, BetaCost>;

struct ManagerPolicy {
  CostDistribution cost = UniformCost{};
};

// Throws std::invalid_argument when the distribution parameters are invalid
// (point mass outside [0, 1], non-positive beta shapes).
void validate(const CostDistribution& cost);

// One independent draw from the configured cost distribution.  The uniform
// default consumes exactly one uniform draw; the point mass consumes none.
// The beta variant delegates to the standard library gamma sampler, so its
// exact draw sequence is implementation-defined (the values are still
// deterministic for a fixed binary).
double draw_cost(const ManagerPolicy& policy, RngStream& rng);

// The manager diverts the funds iff confidence covers the cost: p1 >= h
// (inclusive).  Throws std::invalid_argument when either argument is
// outside [0, 1].
bool decide_embezzlement(double p1, double h);

}  // namespace riskgame::agents
