#ifndef VLHAWKES_STATS_HPP
#define VLHAWKES_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vlhawkes/backward.hpp"
#include "vlhawkes/model.hpp"

namespace vlhawkes {

/// Outcome of one backward + forward replicate. Replicates whose backward
/// pass ran out of budget carry no potential.
struct ReplicateSummary {
  std::uint64_t seed_index = 0;
  BackwardStatus backward_status = BackwardStatus::Terminated;
  std::uint64_t backward_steps = 0;
  std::optional<double> final_potential;
  std::optional<std::size_t> presyn_count;
  std::optional<double> firing_rate;

  bool terminated() const noexcept { return backward_status == BackwardStatus::Terminated; }

  friend bool operator==(const ReplicateSummary&, const ReplicateSummary&) = default;
};

struct ReplicateOptions {
  std::uint64_t budget = 1'000'000;
  unsigned workers = 1;
  std::uint64_t first_index = 0;
  NeuronIndex target = 0;
};

/// Replicate `index` of the family keyed by `master_seed`.
ReplicateSummary run_replicate(const NetworkConfig& config, std::uint64_t master_seed,
                               std::uint64_t index, std::uint64_t budget = 1'000'000,
                               NeuronIndex target = 0);

/// Replicates first_index .. first_index + count - 1, returned in index order.
/// The result does not depend on the worker count.
std::vector<ReplicateSummary> run_replicates(const NetworkConfig& config, std::uint64_t count,
                                             std::uint64_t master_seed,
                                             const ReplicateOptions& options = {});

struct Estimate {
  double value = 0.0;
  double standard_error = 0.0;
};

/// Fraction of terminated replicates whose potential at time 0 is exactly 0.
Estimate zero_probability(std::span<const ReplicateSummary> summaries);

/// Empirical mass function of the presynaptic count over terminated replicates,
/// indexed 0 .. max observed count.
std::vector<double> presyn_pmf(std::span<const ReplicateSummary> summaries);

/// Empirical P(presyn_count >= k) over terminated replicates.
double presyn_tail(std::span<const ReplicateSummary> summaries, std::size_t k);

/// Fixed-width histogram on [min, max) with left-closed bins; values at or
/// above max land in the overflow bin, values below min in the underflow bin.
class Histogram {
 public:
  static Histogram build(std::span<const double> values, double bin_width, double min, double max);

  double bin_width() const noexcept { return width_; }
  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  std::size_t bin_count() const noexcept { return counts_.size(); }
  double bin_left(std::size_t bin) const noexcept { return min_ + width_ * static_cast<double>(bin); }
  double bin_right(std::size_t bin) const noexcept { return bin + 1 == counts_.size() ? max_ : bin_left(bin + 1); }
  std::uint64_t count(std::size_t bin) const { return counts_.at(bin); }
  /// count / (total * width), so in-range densities integrate to the in-range mass.
  double density(std::size_t bin) const;
  std::uint64_t overflow() const noexcept { return overflow_; }
  std::uint64_t underflow() const noexcept { return underflow_; }
  std::uint64_t total() const noexcept { return total_; }

 private:
  double width_ = 1.0;
  double min_ = 0.0;
  double max_ = 1.0;
  std::vector<std::uint64_t> counts_;
  std::uint64_t overflow_ = 0;
  std::uint64_t underflow_ = 0;
  std::uint64_t total_ = 0;
};

struct HistogramSettings {
  double potential_width = 0.1;
  double rate_width = 0.02;
};

struct StatsReport {
  std::uint64_t replicates = 0;
  std::uint64_t terminated = 0;
  std::uint64_t budget_exhausted = 0;
  Estimate zero_probability;
  std::vector<double> presyn_pmf;
  std::size_t max_presyn_count = 0;
  double max_potential = 0.0;
  double mean_potential = 0.0;
  Histogram potential_histogram;
  Histogram rate_histogram;
};

/// All estimators over one list of summaries. Requires at least one terminated replicate.
StatsReport summarize(const NetworkConfig& config, std::span<const ReplicateSummary> summaries,
                      const HistogramSettings& settings = {});

}  // namespace vlhawkes

#endif  // VLHAWKES_STATS_HPP
