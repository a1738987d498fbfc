#pragma once

#include <cstdint>
#include <initializer_list>

namespace riskgame {

// Deterministic, portable random streams.
//
// Every stochastic quantity in the simulator draws from its own substream,
// identified by a path of 64-bit components hashed together with the root
// seed (derive_seed).  The scheme is a fixed contract: adding a new draw
// channel never perturbs the values produced on existing channels, and the
// same (seed, path) pair yields the same draws on every platform.

// SplitMix64 finalizer.  Good 64-bit avalanche, cheap, stateless.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Folds a path of components into the root seed:
//   state = root; for each c: state = mix64(state ^ mix64(c))
constexpr std::uint64_t derive_seed(std::uint64_t root,
                                    std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = root;
  for (std::uint64_t component : path) {
    state = mix64(state ^ mix64(component));
  }
  return state;
}

// Counter-based SplitMix64 stream.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 bits of mantissa.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // True with probability p; consumes exactly one uniform draw.
  bool next_bernoulli(double p) { return next_uniform() < p; }

  // UniformRandomBitGenerator interface, so std:: distributions can be
  // layered on top where portability of the exact stream is not required.
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~0ULL; }
  std::uint64_t operator()() { return next_u64(); }

 private:
  std::uint64_t state_;
};

// Domain tags for seed derivation paths.  Kept distinct so that round-level,
// replication-level and sweep-point-level streams never alias.
inline constexpr std::uint64_t kDomainRound = 0x01;
inline constexpr std::uint64_t kDomainReplication = 0x02;
inline constexpr std::uint64_t kDomainSweepPoint = 0x03;

}  // namespace riskgame
