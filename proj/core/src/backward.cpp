#include "vlhawkes/backward.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vlhawkes {

namespace {

bool contains(const std::vector<NeuronIndex>& sorted, NeuronIndex value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

void insert_sorted(std::vector<NeuronIndex>& sorted, NeuronIndex value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it == sorted.end() || *it != value) {
    sorted.insert(it, value);
  }
}

void erase_sorted(std::vector<NeuronIndex>& sorted, NeuronIndex value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it != sorted.end() && *it == value) {
    sorted.erase(it);
  }
}

// True when some clan member lies within `range` of `neuron` (itself included).
bool covered_by_clan(const std::vector<NeuronIndex>& clan, NeuronIndex neuron, int range) {
  auto it = std::lower_bound(clan.begin(), clan.end(), neuron - range);
  return it != clan.end() && *it <= neuron + range;
}

void add_closed_neighborhood(std::vector<NeuronIndex>& sorted, NeuronIndex neuron, int range) {
  for (NeuronIndex k = neuron - range; k <= neuron + range; ++k) {
    insert_sorted(sorted, k);
  }
}

void shrink_simulated(ClanState& state, NeuronIndex removed, int range,
                      SimulatedSetPolicy policy) {
  switch (policy) {
    case SimulatedSetPolicy::Exact:
      // Only the closed neighbourhood of the removed neuron can lose coverage.
      for (NeuronIndex k = removed - range; k <= removed + range; ++k) {
        if (!covered_by_clan(state.clan, k, range)) {
          erase_sorted(state.simulated, k);
        }
      }
      break;
    case SimulatedSetPolicy::PseudocodeCompat:
      if (!state.in_clan(removed - 1) && !state.in_clan(removed - 2)) {
        erase_sorted(state.simulated, removed - 1);
      }
      if (!state.in_clan(removed + 1) && !state.in_clan(removed + 2)) {
        erase_sorted(state.simulated, removed + 1);
      }
      break;
  }
}

}  // namespace

bool ClanState::in_clan(NeuronIndex neuron) const { return contains(clan, neuron); }

bool ClanState::is_simulated(NeuronIndex neuron) const { return contains(simulated, neuron); }

std::string_view to_string(BackwardStatus status) noexcept {
  return status == BackwardStatus::Terminated ? "terminated" : "budget_exhausted";
}

ClanState backward_init(const NetworkConfig& config, NeuronIndex target) {
  ClanState state;
  state.clan = {target};
  add_closed_neighborhood(state.simulated, target, config.range);
  return state;
}

JumpRecord apply_backward_jump(ClanState& state, const NetworkConfig& config, NeuronIndex neuron,
                               double gap, double mark, SimulatedSetPolicy policy) {
  if (state.clan.empty()) {
    throw ContractViolation("backward step on an empty clan");
  }
  if (!(gap > 0.0)) {
    throw ContractViolation("backward gap must be strictly positive");
  }
  if (!(mark >= 0.0 && mark <= 1.0)) {
    throw ContractViolation("jump mark must lie in [0, 1]");
  }
  if (!state.is_simulated(neuron)) {
    throw ContractViolation("jump drawn for a neuron outside the simulated set");
  }
  if (policy == SimulatedSetPolicy::PseudocodeCompat && config.range != 1) {
    throw ContractViolation("pseudocode-compatible bookkeeping is only defined for range 1");
  }

  double time = state.clock - gap;
  if (!(time < state.clock)) {
    // Rounding swallowed the gap; keep times strictly decreasing.
    time = std::nextafter(state.clock, -std::numeric_limits<double>::infinity());
  }
  state.clock = time;
  ++state.jump_count;

  JumpRecord jump;
  jump.index = state.jump_count;
  jump.neuron = neuron;
  jump.time = time;
  jump.mark = mark;

  if (mark < config.rate.sure_probability()) {
    jump.resolution = Resolution::Sure;
    if (state.in_clan(neuron)) {
      erase_sorted(state.clan, neuron);
      shrink_simulated(state, neuron, config.range, policy);
    }
  } else {
    jump.resolution = Resolution::CandidateUnresolved;
    if (!state.in_clan(neuron)) {
      insert_sorted(state.clan, neuron);
      add_closed_neighborhood(state.simulated, neuron, config.range);
    }
  }
  return jump;
}

JumpRecord backward_step(ClanState& state, const NetworkConfig& config, RandomStream& rng,
                         SimulatedSetPolicy policy) {
  if (state.clan.empty()) {
    throw ContractViolation("backward step on an empty clan");
  }
  const std::size_t n = state.simulated.size();
  const NeuronIndex neuron = state.simulated[rng.index(n)];
  const double gap = rng.exponential(static_cast<double>(n) * config.rate.beta_max());
  const double mark = rng.uniform();
  return apply_backward_jump(state, config, neuron, gap, mark, policy);
}

BackwardResult backward_run(const NetworkConfig& config, RandomStream& rng,
                            const BackwardOptions& options) {
  if (options.budget < 1) {
    throw ContractViolation("backward budget must be at least one step");
  }
  ClanState state = backward_init(config, options.target);
  BackwardResult result;
  result.touched = state.simulated;

  while (!state.clan.empty() && state.jump_count < options.budget) {
    const std::size_t clan_before = state.clan.size();
    JumpRecord jump = backward_step(state, config, rng, options.policy);
    if (state.clan.size() > clan_before) {
      add_closed_neighborhood(result.touched, jump.neuron, config.range);
    }
    if (options.record_trace) {
      result.trace.push_back({jump.index, jump.neuron, jump.time, jump.mark,
                              jump.resolution == Resolution::Sure, state.clan.size(),
                              state.simulated.size()});
    }
    result.jumps.push_back(jump);
  }

  result.t_stop = state.clock;
  if (state.clan.empty()) {
    result.status = BackwardStatus::Terminated;
    result.n_stop = state.jump_count;
  } else {
    result.status = BackwardStatus::BudgetExhausted;
  }
  return result;
}

BackwardResult backward_run(const NetworkConfig& config, std::uint64_t seed,
                            const BackwardOptions& options) {
  RandomStream rng(seed);
  return backward_run(config, rng, options);
}

}  // namespace vlhawkes
