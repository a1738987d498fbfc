#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "riskgame/belief.hpp"

using namespace riskgame;

TEST_SUITE("belief") {

TEST_CASE("confidence with symmetric priors and no evidence is one half") {
  belief::BeliefParams params;
  CHECK(belief::confidence(belief::MemoryCounts{0, 0}, params) == 0.5);
}

TEST_CASE("confidence matches the smoothed frequency") {
  belief::BeliefParams params;
  // (3 + 1) / (3 + 1 + 1 + 1), evaluated independently.
  const double expected = 4.0 / 6.0;
  CHECK(belief::confidence(belief::MemoryCounts{3, 1}, params) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("confidence approaches the empirical frequency for large counts") {
  belief::BeliefParams params;
  const double value = belief::confidence(belief::MemoryCounts{2000, 1000}, params);
  CHECK(value == doctest::Approx(2001.0 / 3002.0).epsilon(1e-12));
  CHECK(std::abs(value - 2.0 / 3.0) < 1e-3);
}

TEST_CASE("confidence accepts real-valued counts") {
  belief::BeliefParams params;
  CHECK(belief::confidence(0.6, 0.4, params) == doctest::Approx(1.6 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(belief::confidence(-0.1, 0.0, params), std::invalid_argument);
}

TEST_CASE("confidence rejects non-positive priors") {
  CHECK_THROWS_AS(belief::confidence(belief::MemoryCounts{1, 1}, {0.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(belief::confidence(belief::MemoryCounts{1, 1}, {1.0, -2.0}),
                  std::invalid_argument);
}

TEST_CASE("bounds and monotonicity hold exhaustively up to 200") {
  belief::BeliefParams params;
  for (std::uint64_t s = 0; s <= 200; ++s) {
    for (std::uint64_t f = 0; f <= 200; ++f) {
      const double b = belief::confidence(belief::MemoryCounts{s, f}, params);
      REQUIRE(b > 0.0);
      REQUIRE(b < 1.0);
      REQUIRE(belief::confidence(belief::MemoryCounts{s + 1, f}, params) > b);
      REQUIRE(belief::confidence(belief::MemoryCounts{s, f + 1}, params) < b);
    }
  }
}

TEST_CASE("limit deviation stays below 2/f for the standard ratios") {
  belief::BeliefParams params;
  for (double a : {0.5, 1.0, 2.0, 5.0}) {
    const double target = a / (a + 1.0);
    for (std::uint64_t f = 1; f <= 1000; ++f) {
      const double s = std::round(a * static_cast<double>(f));
      const double dev = std::abs(belief::confidence(s, static_cast<double>(f), params) - target);
      REQUIRE(dev <= 2.0 / static_cast<double>(f));
    }
  }
}

TEST_CASE("verify_axioms passes with exact zero deviation at a = 1") {
  const belief::AxiomReport report = belief::verify_axioms({1.0, 1.0}, {1.0}, 1000);
  CHECK(report.all_passed());
  REQUIRE(report.final_deviation_by_a.size() == 1);
  CHECK(report.final_deviation_by_a[0].second == 0.0);
}

TEST_CASE("verify_axioms reports the closed-form deviation for a = 5") {
  const belief::AxiomReport report = belief::verify_axioms({1.0, 1.0}, {5.0}, 1000);
  CHECK(report.all_passed());
  // |1 - a| / ((a+1) ((a+1) f + 2)) at a = 5, f = 1000.
  const double expected = 4.0 / (6.0 * 6002.0);
  CHECK(report.final_deviation_by_a[0].second == doctest::Approx(expected).epsilon(1e-9));
  CHECK(report.limit_tolerance == doctest::Approx(0.002));
}

TEST_CASE("verify_axioms passes for fractional and integer ratios") {
  const belief::AxiomReport report = belief::verify_axioms({1.0, 1.0}, {0.5, 2.0}, 100);
  CHECK(report.bounds.passed);
  CHECK(report.monotone.passed);
  CHECK(report.limit.passed);
}

TEST_CASE("verify_axioms rejects bad arguments") {
  CHECK_THROWS_AS(belief::verify_axioms({1.0, 1.0}, {}, 100), std::invalid_argument);
  CHECK_THROWS_AS(belief::verify_axioms({1.0, 1.0}, {1.0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(belief::verify_axioms({1.0, 1.0}, {-1.0}, 100), std::invalid_argument);
  CHECK_THROWS_AS(belief::verify_axioms({0.0, 1.0}, {1.0}, 100), std::invalid_argument);
}

}  // TEST_SUITE
