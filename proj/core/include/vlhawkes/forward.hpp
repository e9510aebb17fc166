#ifndef VLHAWKES_FORWARD_HPP
#define VLHAWKES_FORWARD_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vlhawkes/backward.hpp"
#include "vlhawkes/model.hpp"

namespace vlhawkes {

struct JumpResolution {
  std::uint64_t index;
  NeuronIndex neuron;
  double time;
  double potential;  // potential of the jumping neuron just before the jump
  Resolution resolution;
};

struct ForwardResult {
  double final_potential = 0.0;
  std::size_t presyn_count = 0;
  std::vector<JumpResolution> resolutions;  // chronological order
  std::vector<double> presyn_times;         // target's presynaptic spikes since its last reset
};

/// (rate(x) - beta_min) / (beta_max - beta_min): probability that a
/// candidate jump at potential x is a true spike.
double acceptance_probability(double potential, const RateFunction& rate);

/// Thinning test for a candidate atom with the given mark.
inline bool thinning_accepts(const RateFunction& rate, double potential, double mark) {
  return rate(potential) / rate.beta_max() >= mark;
}

/// Jumps of a backward run in increasing time order.
std::vector<JumpRecord> chronological(const BackwardResult& backward);

/// Chronological sweep: resolves every candidate by thinning against the
/// potential built from spikes since the neuron's last reset, resets spiking
/// neurons and feeds their neighbours, then reports the target's potential at
/// time 0. `jumps` must be strictly increasing in time.
ForwardResult forward_run(std::span<const JumpRecord> jumps, const NetworkConfig& config,
                          NeuronIndex target = 0);

/// Comparison-only variant following the main-text description: candidates
/// are resolved oldest first with a fresh Bernoulli draw, their potential
/// counting only spikes that were sure a priori since the last a-priori sure
/// jump of the neuron. Not used by the statistics harness.
ForwardResult forward_run_main_text(std::span<const JumpRecord> jumps, const NetworkConfig& config,
                                    std::uint64_t seed, NeuronIndex target = 0);

}  // namespace vlhawkes

#endif  // VLHAWKES_FORWARD_HPP
