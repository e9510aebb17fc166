#ifndef VLHAWKES_PHASE_HPP
#define VLHAWKES_PHASE_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace vlhawkes {

/// beta_min / (beta_max - beta_min). Throws DomainError unless 0 < beta_min < beta_max.
double delta_of(double beta_min, double beta_max);

/// Linear birth-death comparison process: from n > 0 it jumps to n + 1 at
/// rate n and to n - 1 at rate n * delta.
struct BranchingConfig {
  double delta = 1.0;
  double horizon = 1e3;
  std::uint64_t cap = 10'000;
  std::uint64_t replicates = 100'000;
  std::uint64_t initial = 1;

  void validate() const;
};

struct BranchingOutcome {
  bool extinct = false;
  bool censored = false;  // stopped by horizon or cap; counted as survival
  double time = 0.0;      // extinction time, or the time the run was stopped
  std::uint64_t max_population = 0;
  std::uint64_t events = 0;
  std::uint64_t up_moves = 0;
};

BranchingOutcome branching_simulate(const BranchingConfig& config, std::uint64_t seed);

struct ExtinctionEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  double mean_extinction_time = 0.0;  // over extinct runs; NaN when none went extinct
  double censored_fraction = 0.0;
  std::uint64_t replicates = 0;
};

/// Monte Carlo estimate of the extinction probability with its binomial
/// standard error. Replicate k uses the stream derive_seed(seed, k).
ExtinctionEstimate extinction_probability(const BranchingConfig& config, std::uint64_t seed,
                                          unsigned workers = 1);

struct PhaseScanRow {
  double delta;
  ExtinctionEstimate extinction;
};

struct PhaseScanReport {
  std::vector<PhaseScanRow> rows;  // sorted by delta
};

/// One extinction estimate per grid point, using `base` for everything but delta.
PhaseScanReport delta_scan(std::span<const double> grid, const BranchingConfig& base,
                           std::uint64_t seed, unsigned workers = 1);

}  // namespace vlhawkes

#endif  // VLHAWKES_PHASE_HPP
