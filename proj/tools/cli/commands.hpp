#ifndef VLHAWKES_TOOLS_COMMANDS_HPP
#define VLHAWKES_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "vlhawkes/model.hpp"

namespace vlhawkes::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 2,
  kBudgetExhausted = 3,
  kOutputError = 4,
};

struct RunConfig {
  NetworkConfig network = NetworkConfig::defaults();
  std::uint64_t replicates = 100'000;
  std::uint64_t master_seed = 42;
  std::uint64_t budget = 1'000'000;
  std::string out_dir = "out";
  unsigned workers = 0;
  double max_exhausted_fraction = 0.01;
  std::uint64_t replicate_index = 0;  // trace only
};

struct PhaseScanConfig {
  std::vector<double> grid;
  std::uint64_t replicates = 10'000;
  std::uint64_t seed = 42;
  double horizon = 1e3;
  std::uint64_t cap = 10'000;
  std::string out_dir = "out";
  unsigned workers = 0;
};

/// Writes summaries.csv, report.json and histograms.csv into out_dir.
int cmd_simulate(const RunConfig& config, std::ostream& log);

/// Writes phase.csv into out_dir.
int cmd_phase_scan(const PhaseScanConfig& config, std::ostream& log);

/// Runs replicate `replicate_index` of `master_seed` with dumps enabled:
/// backward_trace.csv and, when the clan emptied, forward_trace.csv.
int cmd_trace(const RunConfig& config, std::ostream& log);

/// Comma-separated list of numbers; throws ConfigError("grid", ...) on bad input.
std::vector<double> parse_grid(const std::string& text);

/// Full command line: parses, dispatches, maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vlhawkes::cli

#endif  // VLHAWKES_TOOLS_COMMANDS_HPP
