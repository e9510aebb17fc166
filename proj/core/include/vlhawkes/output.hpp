#ifndef VLHAWKES_OUTPUT_HPP
#define VLHAWKES_OUTPUT_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "vlhawkes/backward.hpp"
#include "vlhawkes/forward.hpp"
#include "vlhawkes/model.hpp"
#include "vlhawkes/phase.hpp"
#include "vlhawkes/stats.hpp"

namespace vlhawkes {

/// Shortest decimal that round-trips, '.' separator, independent of locale.
std::string format_double(double value);

struct RunMetadata {
  std::uint64_t master_seed = 0;
  std::uint64_t budget = 0;
};

// All CSV writers emit a header row and '\n' line endings.

/// seed_index,final_potential,presyn_count,backward_steps,backward_status,firing_rate
void write_summaries_csv(std::ostream& out, std::span<const ReplicateSummary> summaries);

struct NamedHistogram {
  std::string_view series;
  const Histogram* histogram;
};

/// bin_left,bin_right,count,density,series
void write_histograms_csv(std::ostream& out, std::span<const NamedHistogram> histograms);

void write_report_json(std::ostream& out, const StatsReport& report, const NetworkConfig& config,
                       const RunMetadata& meta);

/// delta,extinction_estimate,stderr,mean_extinction_time,censored_fraction,process
void write_phase_csv(std::ostream& out, const PhaseScanReport& report);

/// index,neuron,time,mark,sure,clan_size,simulated_size
void write_backward_trace_csv(std::ostream& out, std::span<const BackwardTraceRow> rows);

/// index,neuron,time,potential,resolution
void write_forward_trace_csv(std::ostream& out, std::span<const JumpResolution> rows);

}  // namespace vlhawkes

#endif  // VLHAWKES_OUTPUT_HPP
