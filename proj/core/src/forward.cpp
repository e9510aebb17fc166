#include "vlhawkes/forward.hpp"

#include <algorithm>
#include <unordered_map>

#include "vlhawkes/random.hpp"

namespace vlhawkes {

namespace {

void check_chronological(std::span<const JumpRecord> jumps) {
  for (std::size_t k = 0; k < jumps.size(); ++k) {
    if (!(jumps[k].mark >= 0.0 && jumps[k].mark <= 1.0)) {
      throw ContractViolation("jump mark outside [0, 1]");
    }
    if (k > 0 && !(jumps[k - 1].time < jumps[k].time)) {
      throw ContractViolation("forward pass needs jumps strictly increasing in time");
    }
  }
}

}  // namespace

double acceptance_probability(double potential, const RateFunction& rate) {
  return (rate(potential) - rate.beta_min()) / (rate.beta_max() - rate.beta_min());
}

std::vector<JumpRecord> chronological(const BackwardResult& backward) {
  return {backward.jumps.rbegin(), backward.jumps.rend()};
}

ForwardResult forward_run(std::span<const JumpRecord> jumps, const NetworkConfig& config,
                          NeuronIndex target) {
  check_chronological(jumps);

  std::unordered_map<NeuronIndex, std::vector<double>> presyn;
  ForwardResult result;
  result.resolutions.reserve(jumps.size());

  for (const auto& jump : jumps) {
    auto& own = presyn[jump.neuron];
    const double x = potential_at(own, jump.time, config.kernel);

    Resolution resolution = Resolution::Sure;
    if (jump.resolution != Resolution::Sure) {
      resolution = thinning_accepts(config.rate, x, jump.mark) ? Resolution::CandidateAccepted
                                                               : Resolution::CandidateRejected;
    }
    result.resolutions.push_back({jump.index, jump.neuron, jump.time, x, resolution});

    if (resolution == Resolution::Sure || resolution == Resolution::CandidateAccepted) {
      own.clear();
      for (NeuronIndex k = jump.neuron - config.range; k <= jump.neuron + config.range; ++k) {
        if (k != jump.neuron) {
          presyn[k].push_back(jump.time);
        }
      }
    }
  }

  if (auto it = presyn.find(target); it != presyn.end()) {
    result.presyn_times = it->second;
  }
  result.presyn_count = result.presyn_times.size();
  result.final_potential = potential_at(result.presyn_times, 0.0, config.kernel);
  return result;
}

ForwardResult forward_run_main_text(std::span<const JumpRecord> jumps, const NetworkConfig& config,
                                    std::uint64_t seed, NeuronIndex target) {
  check_chronological(jumps);
  RandomStream rng(seed);

  const auto interacts = [&](NeuronIndex a, NeuronIndex b) {
    return a != b && (a > b ? a - b : b - a) <= config.range;
  };

  std::vector<Resolution> resolved(jumps.size());
  std::vector<double> potentials(jumps.size(), 0.0);
  for (std::size_t m = 0; m < jumps.size(); ++m) {
    const auto& jump = jumps[m];
    if (jump.resolution == Resolution::Sure) {
      resolved[m] = Resolution::Sure;
      continue;
    }
    // Window opens at the last a-priori sure jump of this neuron.
    std::size_t start = 0;
    for (std::size_t r = m; r-- > 0;) {
      if (jumps[r].neuron == jump.neuron && jumps[r].resolution == Resolution::Sure) {
        start = r + 1;
        break;
      }
    }
    double a = 0.0;
    for (std::size_t l = start; l < m; ++l) {
      if (jumps[l].resolution == Resolution::Sure && interacts(jumps[l].neuron, jump.neuron)) {
        a += kernel_eval(config.kernel, jump.time - jumps[l].time);
      }
    }
    potentials[m] = a;
    resolved[m] = rng.bernoulli(acceptance_probability(a, config.rate))
                      ? Resolution::CandidateAccepted
                      : Resolution::CandidateRejected;
  }

  ForwardResult result;
  result.resolutions.reserve(jumps.size());
  for (std::size_t m = 0; m < jumps.size(); ++m) {
    result.resolutions.push_back(
        {jumps[m].index, jumps[m].neuron, jumps[m].time, potentials[m], resolved[m]});
  }

  const auto spiked = [&](std::size_t m) {
    return resolved[m] == Resolution::Sure || resolved[m] == Resolution::CandidateAccepted;
  };
  std::size_t start = 0;
  for (std::size_t m = jumps.size(); m-- > 0;) {
    if (jumps[m].neuron == target && spiked(m)) {
      start = m + 1;
      break;
    }
  }
  for (std::size_t m = start; m < jumps.size(); ++m) {
    if (spiked(m) && interacts(jumps[m].neuron, target)) {
      result.presyn_times.push_back(jumps[m].time);
    }
  }
  result.presyn_count = result.presyn_times.size();
  result.final_potential = potential_at(result.presyn_times, 0.0, config.kernel);
  return result;
}

}  // namespace vlhawkes
