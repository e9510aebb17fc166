#ifndef VLHAWKES_BACKWARD_HPP
#define VLHAWKES_BACKWARD_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vlhawkes/model.hpp"
#include "vlhawkes/random.hpp"

namespace vlhawkes {

/// How the set of simulated neurons is updated when a clan member leaves.
enum class SimulatedSetPolicy {
  /// simulated = clan plus all neighbours of clan members, after every step.
  Exact,
  /// Bookkeeping of the published nearest-neighbour pseudocode: on removal of
  /// i, drop i-1 (resp. i+1) only when neither it nor i-2 (resp. i+2) is in
  /// the clan, and never drop i. Only defined for range 1; kept for comparison.
  PseudocodeCompat,
};

/// State of the backward sweep. `clan` and `simulated` are sorted and unique.
struct ClanState {
  std::vector<NeuronIndex> clan;
  std::vector<NeuronIndex> simulated;
  double clock = 0.0;
  std::uint64_t jump_count = 0;

  bool in_clan(NeuronIndex neuron) const;
  bool is_simulated(NeuronIndex neuron) const;
};

enum class BackwardStatus { Terminated, BudgetExhausted };

std::string_view to_string(BackwardStatus status) noexcept;

struct BackwardTraceRow {
  std::uint64_t index;
  NeuronIndex neuron;
  double time;
  double mark;
  bool sure;
  std::size_t clan_size;       // after the step
  std::size_t simulated_size;  // after the step
};

struct BackwardResult {
  std::vector<JumpRecord> jumps;  // generation order, strictly decreasing times
  BackwardStatus status = BackwardStatus::BudgetExhausted;
  std::uint64_t n_stop = 0;        // number of steps when terminated
  double t_stop = 0.0;             // time of the last generated jump
  std::vector<NeuronIndex> touched;  // every neuron that was ever simulated
  std::vector<BackwardTraceRow> trace;

  bool terminated() const noexcept { return status == BackwardStatus::Terminated; }
};

struct BackwardOptions {
  NeuronIndex target = 0;
  std::uint64_t budget = 1'000'000;
  SimulatedSetPolicy policy = SimulatedSetPolicy::Exact;
  bool record_trace = false;
};

ClanState backward_init(const NetworkConfig& config, NeuronIndex target);

/// Deterministic part of one backward step: the atom of `neuron` arriving
/// `gap` time units before the current clock with uniform `mark`. Exposed so
/// tests can drive specific draws.
JumpRecord apply_backward_jump(ClanState& state, const NetworkConfig& config, NeuronIndex neuron,
                               double gap, double mark,
                               SimulatedSetPolicy policy = SimulatedSetPolicy::Exact);

/// Draws the next atom of the dominating process restricted to the simulated
/// neurons (neuron uniform over the set, gap exponential with rate
/// |simulated| * beta_max, uniform mark) and applies it.
JumpRecord backward_step(ClanState& state, const NetworkConfig& config, RandomStream& rng,
                         SimulatedSetPolicy policy = SimulatedSetPolicy::Exact);

/// Runs backward steps until the clan empties or `options.budget` steps elapse.
BackwardResult backward_run(const NetworkConfig& config, std::uint64_t seed,
                            const BackwardOptions& options = {});

BackwardResult backward_run(const NetworkConfig& config, RandomStream& rng,
                            const BackwardOptions& options = {});

}  // namespace vlhawkes

#endif  // VLHAWKES_BACKWARD_HPP
