#include "cli/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "vlhawkes/backward.hpp"
#include "vlhawkes/config.hpp"
#include "vlhawkes/forward.hpp"
#include "vlhawkes/output.hpp"
#include "vlhawkes/phase.hpp"
#include "vlhawkes/random.hpp"
#include "vlhawkes/stats.hpp"

namespace vlhawkes::cli {

namespace fs = std::filesystem;

namespace {

class OutputFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fs::path prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw OutputFailure("cannot create output directory " + dir);
  }
  return fs::path(dir);
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
  std::ostringstream buffer;
  writer(buffer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw OutputFailure("cannot open " + path.string() + " for writing");
  }
  out << buffer.str();
  out.flush();
  if (!out) {
    throw OutputFailure("failed writing " + path.string());
  }
}

void validate_run(const RunConfig& config) {
  config.network.validate();
  if (config.replicates < 1) {
    throw ConfigError("replicates", "must be at least 1");
  }
  if (config.budget < 1) {
    throw ConfigError("budget", "must be at least 1");
  }
  if (!(config.max_exhausted_fraction >= 0.0 && config.max_exhausted_fraction <= 1.0)) {
    throw ConfigError("max-exhausted-fraction", "must lie in [0, 1]");
  }
}

template <typename Fn>
int guarded(std::ostream& log, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    log << "invalid configuration: " << e.what() << '\n';
    return kValidationError;
  } catch (const OutputFailure& e) {
    log << "output error: " << e.what() << '\n';
    return kOutputError;
  }
}

}  // namespace

int cmd_simulate(const RunConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    validate_run(config);
    const fs::path dir = prepare_out_dir(config.out_dir);

    ReplicateOptions options;
    options.budget = config.budget;
    options.workers = config.workers;
    const auto summaries =
        run_replicates(config.network, config.replicates, config.master_seed, options);

    write_file(dir / "summaries.csv", [&](std::ostream& o) { write_summaries_csv(o, summaries); });

    std::uint64_t exhausted = 0;
    for (const auto& s : summaries) {
      exhausted += s.terminated() ? 0 : 1;
    }
    const double exhausted_fraction =
        static_cast<double>(exhausted) / static_cast<double>(summaries.size());

    if (exhausted < summaries.size()) {
      const StatsReport report = summarize(config.network, summaries);
      write_file(dir / "report.json", [&](std::ostream& o) {
        write_report_json(o, report, config.network, {config.master_seed, config.budget});
      });
      const NamedHistogram hists[] = {{"potential", &report.potential_histogram},
                                      {"firing_rate", &report.rate_histogram}};
      write_file(dir / "histograms.csv", [&](std::ostream& o) { write_histograms_csv(o, hists); });
      log << "replicates: " << report.replicates << " (budget exhausted: "
          << report.budget_exhausted << ")\n"
          << "P(potential = 0): " << format_double(report.zero_probability.value) << " +/- "
          << format_double(report.zero_probability.standard_error) << '\n'
          << "max potential: " << format_double(report.max_potential)
          << ", max presynaptic count: " << report.max_presyn_count << '\n';
    } else {
      log << "every replicate exhausted its budget; no distribution written\n";
    }

    if (exhausted_fraction > config.max_exhausted_fraction) {
      log << "budget-exhausted fraction " << format_double(exhausted_fraction)
          << " exceeds threshold " << format_double(config.max_exhausted_fraction) << '\n';
      return static_cast<int>(kBudgetExhausted);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_phase_scan(const PhaseScanConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    BranchingConfig base;
    base.horizon = config.horizon;
    base.cap = config.cap;
    base.replicates = config.replicates;
    if (config.grid.empty()) {
      throw ConfigError("grid", "needs at least one delta");
    }
    for (double d : config.grid) {
      if (!(d > 0.0)) {
        throw ConfigError("grid", "every delta must be positive");
      }
    }
    if (config.replicates < 1) {
      throw ConfigError("replicates", "must be at least 1");
    }
    if (!(config.horizon > 0.0)) {
      throw ConfigError("horizon", "must be positive");
    }
    if (config.cap < 1) {
      throw ConfigError("cap", "must be at least 1");
    }
    const fs::path dir = prepare_out_dir(config.out_dir);
    const PhaseScanReport report = delta_scan(config.grid, base, config.seed, config.workers);
    write_file(dir / "phase.csv", [&](std::ostream& o) { write_phase_csv(o, report); });
    log << "linear birth-death comparison process\n";
    for (const auto& row : report.rows) {
      log << "delta " << format_double(row.delta) << ": extinction "
          << format_double(row.extinction.estimate) << " +/- "
          << format_double(row.extinction.standard_error) << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int cmd_trace(const RunConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    validate_run(config);
    const fs::path dir = prepare_out_dir(config.out_dir);

    BackwardOptions options;
    options.budget = config.budget;
    options.record_trace = true;
    const BackwardResult backward = backward_run(
        config.network, derive_seed(config.master_seed, config.replicate_index), options);
    write_file(dir / "backward_trace.csv",
               [&](std::ostream& o) { write_backward_trace_csv(o, backward.trace); });
    log << "backward: " << backward.jumps.size() << " jumps, " << to_string(backward.status)
        << ", touched " << backward.touched.size() << " neurons\n";
    if (!backward.terminated()) {
      return static_cast<int>(kBudgetExhausted);
    }
    const auto jumps = chronological(backward);
    const ForwardResult forward = forward_run(jumps, config.network);
    write_file(dir / "forward_trace.csv",
               [&](std::ostream& o) { write_forward_trace_csv(o, forward.resolutions); });
    log << "forward: potential at 0 = " << format_double(forward.final_potential) << " from "
        << forward.presyn_count << " presynaptic spikes\n";
    return static_cast<int>(kOk);
  });
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    std::string token = text.substr(pos, end - pos);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? std::string{} : token.substr(first, last - first + 1);
    if (token.empty()) {
      if (comma == std::string::npos && out.empty() && text.find_first_not_of(" \t") == std::string::npos) {
        break;
      }
      throw ConfigError("grid", "empty entry in '" + text + "'");
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ConfigError("grid", "not a number: '" + token + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) {
      break;
    }
    pos = comma + 1;
  }
  if (out.empty()) {
    throw ConfigError("grid", "needs at least one delta");
  }
  return out;
}

namespace {

struct ModelFlags {
  std::optional<double> beta_min;
  std::optional<double> beta_max;
  std::optional<double> weight;
  std::optional<double> decay;
  std::optional<int> range;
  std::string config_path;
};

void add_model_flags(CLI::App& cmd, ModelFlags& flags) {
  cmd.add_option("--config", flags.config_path, "JSON file with beta_min, beta_max, W, lambda, range")
      ->envname("VLHAWKES_CONFIG");
  cmd.add_option("--beta-min", flags.beta_min, "lower rate bound (Hz)")->envname("VLHAWKES_BETA_MIN");
  cmd.add_option("--beta-max", flags.beta_max, "upper rate bound (Hz)")->envname("VLHAWKES_BETA_MAX");
  cmd.add_option("--w", flags.weight, "synaptic weight W")->envname("VLHAWKES_W");
  cmd.add_option("--lambda", flags.decay, "kernel decay exponent")->envname("VLHAWKES_LAMBDA");
  cmd.add_option("--range", flags.range, "neighbourhood radius")->envname("VLHAWKES_RANGE");
}

// Config file first, then flags (or their environment variables) on top.
NetworkConfig resolve_network(const ModelFlags& flags) {
  NetworkConfig base = NetworkConfig::defaults();
  if (!flags.config_path.empty()) {
    base = load_network_config(flags.config_path, base);
  }
  std::string overrides = "{";
  auto add = [&](const char* key, const std::string& value) {
    if (overrides.size() > 1) overrides += ',';
    overrides += '"';
    overrides += key;
    overrides += "\":";
    overrides += value;
  };
  if (flags.beta_min) add("beta_min", format_double(*flags.beta_min));
  if (flags.beta_max) add("beta_max", format_double(*flags.beta_max));
  if (flags.weight) add("W", format_double(*flags.weight));
  if (flags.decay) add("lambda", format_double(*flags.decay));
  if (flags.range) add("range", std::to_string(*flags.range));
  overrides += '}';
  return parse_network_config(overrides, base);
}

void add_run_flags(CLI::App& cmd, RunConfig& run) {
  cmd.add_option("--replicates", run.replicates, "number of replicates N")
      ->envname("VLHAWKES_REPLICATES")
      ->capture_default_str();
  cmd.add_option("--seed", run.master_seed, "master seed")->envname("VLHAWKES_SEED")->capture_default_str();
  cmd.add_option("--budget", run.budget, "backward step budget per replicate")
      ->envname("VLHAWKES_BUDGET")
      ->capture_default_str();
  cmd.add_option("--out", run.out_dir, "output directory")->envname("VLHAWKES_OUT")->capture_default_str();
  cmd.add_option("--workers", run.workers, "worker threads (0 = all cores)")
      ->envname("VLHAWKES_WORKERS")
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect simulation of a variable-length-memory inhibitory Hawkes network"};
  app.require_subcommand(1);

  ModelFlags model_flags;
  RunConfig run_config;

  auto* simulate = app.add_subcommand("simulate", "run N replicates and write summaries, report, histograms");
  add_model_flags(*simulate, model_flags);
  add_run_flags(*simulate, run_config);
  simulate->add_option("--max-exhausted-fraction", run_config.max_exhausted_fraction,
                       "exit 3 when more replicates than this exhaust their budget")
      ->envname("VLHAWKES_MAX_EXHAUSTED_FRACTION")
      ->capture_default_str();

  auto* trace = app.add_subcommand("trace", "run one replicate with backward and forward dumps");
  add_model_flags(*trace, model_flags);
  add_run_flags(*trace, run_config);
  trace->add_option("--replicate", run_config.replicate_index, "replicate index within the seed family")
      ->capture_default_str();

  PhaseScanConfig phase_config;
  std::string grid_text;
  auto* phase = app.add_subcommand("phase-scan", "extinction of the birth-death comparison process over a delta grid");
  phase->add_option("--grid", grid_text, "comma-separated deltas")->required()->envname("VLHAWKES_GRID");
  phase->add_option("--replicates", phase_config.replicates, "replicates per delta")
      ->envname("VLHAWKES_REPLICATES")
      ->capture_default_str();
  phase->add_option("--seed", phase_config.seed, "master seed")->envname("VLHAWKES_SEED")->capture_default_str();
  phase->add_option("--horizon", phase_config.horizon, "time cap per run")->capture_default_str();
  phase->add_option("--cap", phase_config.cap, "population cap per run")->capture_default_str();
  phase->add_option("--out", phase_config.out_dir, "output directory")->envname("VLHAWKES_OUT")->capture_default_str();
  phase->add_option("--workers", phase_config.workers, "worker threads (0 = all cores)")
      ->envname("VLHAWKES_WORKERS")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kValidationError;
  }

  if (phase->parsed()) {
    try {
      phase_config.grid = parse_grid(grid_text);
    } catch (const ConfigError& e) {
      err << "invalid configuration: " << e.what() << '\n';
      return kValidationError;
    }
    return cmd_phase_scan(phase_config, out);
  }

  try {
    run_config.network = resolve_network(model_flags);
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kValidationError;
  }
  if (simulate->parsed()) {
    return cmd_simulate(run_config, out);
  }
  return cmd_trace(run_config, out);
}

}  // namespace vlhawkes::cli
