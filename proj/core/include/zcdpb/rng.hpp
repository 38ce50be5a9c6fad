#pragma once

#include <cstdint>
#include <random>

namespace zcdpb {

/// Which consumer of randomness a stream belongs to. Environment draws,
/// mechanism (privacy) noise and policy-internal randomisation each get their
/// own stream, so adding or removing noise draws never perturbs reward draws.
enum class StreamKind : std::uint64_t {
  instance = 0,   // one-off environment construction (actions, theta*)
  env = 1,        // reward noise, contexts
  mechanism = 2,  // Gaussian mechanism noise
  policy = 3,     // policy-internal randomisation
};

namespace detail {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Counter-based splittable PRNG (splitmix64). The state is a Weyl counter;
/// each output is a finalised mix of it, so identical (seed, draw index)
/// always reproduces the same value. Satisfies UniformRandomBitGenerator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    state_ += detail::kGamma;
    return detail::mix64(state_);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal draw. The underlying distribution caches the second
  /// value of each generated pair; the cache is part of the stream state.
  double normal() { return normal_(*this); }

 private:
  std::uint64_t state_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Derives the substream for (base_seed, run, kind). Distinct indices give
/// statistically independent streams; identical indices give identical draws.
inline RngStream make_stream(std::uint64_t base_seed, std::uint64_t run,
                             StreamKind kind) {
  std::uint64_t s = detail::mix64(base_seed ^ 0xD6E8FEB86659FD93ull);
  s = detail::mix64(s ^ (run * detail::kGamma + 1));
  s = detail::mix64(s ^ (static_cast<std::uint64_t>(kind) * 0xA24BAED4963EE407ull + 1));
  return RngStream(s);
}

}  // namespace zcdpb
