#include "vlhawkes/random.hpp"

#include <cmath>
#include <limits>

namespace vlhawkes {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

double RandomStream::exponential(double rate) {
  double gap = -std::log(uniform_positive()) / rate;
  if (gap <= 0.0) {
    gap = std::numeric_limits<double>::denorm_min();
  }
  return gap;
}

std::size_t RandomStream::index(std::size_t n) {
  // Rejection on the top of the range keeps the draw exactly uniform.
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) {
    draw = engine_();
  }
  return static_cast<std::size_t>(draw % bound);
}

}  // namespace vlhawkes
