#include "riskgame/agents.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace riskgame::agents {

namespace {

void check_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(value));
  }
}

}  // namespace

AllOrNothingPolicy::AllOrNothingPolicy(double mu) : mu_(mu) {
  if (!(mu > 0.5 && mu <= 1.0)) {
    throw std::invalid_argument("mu must lie in (0.5; 1], got " + std::to_string(mu));
  }
}

TieredPolicy::TieredPolicy(double mu1, double mu2, double mu3)
    : mu1_(mu1), mu2_(mu2), mu3_(mu3) {
  if (!(mu1 > 0.5 && mu1 <= 0.65)) {
    throw std::invalid_argument("mu1 must lie in (0.5; 0.65], got " + std::to_string(mu1));
  }
  if (!(mu2 > 0.65 && mu2 <= 0.8)) {
    throw std::invalid_argument("mu2 must lie in (0.65; 0.8], got " + std::to_string(mu2));
  }
  if (!(mu3 > 0.8 && mu3 <= 1.0)) {
    throw std::invalid_argument("mu3 must lie in (0.8; 1], got " + std::to_string(mu3));
  }
}

InvestedFraction decide_investment(double p0, const InvestorPolicy& policy) {
  check_probability(p0, "p0");
  struct Visitor {
    double p0;
    InvestedFraction operator()(const AllOrNothingPolicy& p) const {
      return p0 >= p.mu() ? InvestedFraction::All : InvestedFraction::None;
    }
    InvestedFraction operator()(const TieredPolicy& p) const {
      if (p0 < p.mu1()) return InvestedFraction::None;
      if (p0 < p.mu2()) return InvestedFraction::Third;
      if (p0 < p.mu3()) return InvestedFraction::TwoThirds;
      return InvestedFraction::All;
    }
  };
  return std::visit(Visitor{p0}, policy);
}

void validate(const CostDistribution& cost) {
  struct Visitor {
    void operator()(const UniformCost&) const {}
    void operator()(const PointMassCost& p) const {
      if (!(p.value >= 0.0 && p.value <= 1.0)) {
        throw std::invalid_argument("point-mass cost must lie in [0, 1], got " +
                                    std::to_string(p.value));
      }
    }
    void operator()(const BetaCost& b) const {
      if (!(b.alpha > 0.0) || !(b.beta > 0.0)) {
        throw std::invalid_argument("beta cost shapes must be > 0, got alpha=" +
                                    std::to_string(b.alpha) + " beta=" +
                                    std::to_string(b.beta));
      }
    }
  };
  std::visit(Visitor{}, cost);
}

double draw_cost(const ManagerPolicy& policy, RngStream& rng) {
  validate(policy.cost);
  struct Visitor {
    RngStream& rng;
    double operator()(const UniformCost&) const { return rng.next_uniform(); }
    double operator()(const PointMassCost& p) const { return p.value; }
    double operator()(const BetaCost& b) const {
      std::gamma_distribution<double> gamma_a(b.alpha, 1.0);
      std::gamma_distribution<double> gamma_b(b.beta, 1.0);
      const double x = gamma_a(rng);
      const double y = gamma_b(rng);
      const double total = x + y;
      return total > 0.0 ? x / total : 0.5;
    }
  };
  return std::visit(Visitor{rng}, policy.cost);
}

bool decide_embezzlement(double p1, double h) {
  check_probability(p1, "p1");
  check_probability(h, "h");
  return p1 >= h;
}

}  // namespace riskgame::agents
