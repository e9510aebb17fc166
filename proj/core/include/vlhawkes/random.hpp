#ifndef VLHAWKES_RANDOM_HPP
#define VLHAWKES_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace vlhawkes {

/// Seed for stream `stream` of a family keyed by `master`. Pure function of
/// its arguments, so replicate k always sees the same numbers regardless of
/// which worker runs it or in which order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

/// Per-replicate random stream. Variate generation is written out here
/// rather than taken from <random> distributions so that output is identical
/// across standard library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_positive() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

  /// Exponential with the given rate; always strictly positive.
  double exponential(double rate);

  /// Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n);

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vlhawkes

#endif  // VLHAWKES_RANDOM_HPP
