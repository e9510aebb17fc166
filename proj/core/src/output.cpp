#include "vlhawkes/output.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <nlohmann/json.hpp>

#include "vlhawkes/config.hpp"

namespace vlhawkes {

std::string format_double(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  std::array<char, 32> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), end);
}

void write_summaries_csv(std::ostream& out, std::span<const ReplicateSummary> summaries) {
  out << "seed_index,final_potential,presyn_count,backward_steps,backward_status,firing_rate\n";
  for (const auto& s : summaries) {
    out << s.seed_index << ',';
    if (s.final_potential) out << format_double(*s.final_potential);
    out << ',';
    if (s.presyn_count) out << *s.presyn_count;
    out << ',' << s.backward_steps << ',' << to_string(s.backward_status) << ',';
    if (s.firing_rate) out << format_double(*s.firing_rate);
    out << '\n';
  }
}

void write_histograms_csv(std::ostream& out, std::span<const NamedHistogram> histograms) {
  out << "bin_left,bin_right,count,density,series\n";
  for (const auto& [series, h] : histograms) {
    for (std::size_t b = 0; b < h->bin_count(); ++b) {
      out << format_double(h->bin_left(b)) << ',' << format_double(h->bin_right(b)) << ','
          << h->count(b) << ',' << format_double(h->density(b)) << ',' << series << '\n';
    }
    if (h->overflow() > 0) {
      out << format_double(h->max()) << ",inf," << h->overflow() << ",0," << series << '\n';
    }
  }
}

namespace {

nlohmann::json histogram_json(const Histogram& h) {
  return {{"bin_width", h.bin_width()}, {"min", h.min()},         {"max", h.max()},
          {"bins", h.bin_count()},      {"total", h.total()},     {"overflow", h.overflow()},
          {"underflow", h.underflow()}};
}

}  // namespace

void write_report_json(std::ostream& out, const StatsReport& report, const NetworkConfig& config,
                       const RunMetadata& meta) {
  nlohmann::json doc;
  doc["config"] = nlohmann::json::parse(network_config_to_json(config));
  doc["master_seed"] = meta.master_seed;
  doc["budget"] = meta.budget;
  doc["replicates"] = report.replicates;
  doc["terminated"] = report.terminated;
  doc["budget_exhausted"] = report.budget_exhausted;
  doc["budget_exhausted_fraction"] =
      report.replicates > 0
          ? static_cast<double>(report.budget_exhausted) / static_cast<double>(report.replicates)
          : 0.0;
  doc["zero_probability"] = {{"estimate", report.zero_probability.value},
                             {"stderr", report.zero_probability.standard_error}};
  doc["presyn_pmf"] = report.presyn_pmf;
  doc["max_presyn_count"] = report.max_presyn_count;
  doc["max_potential"] = report.max_potential;
  doc["mean_potential"] = report.mean_potential;
  doc["histograms"] = {{"potential", histogram_json(report.potential_histogram)},
                       {"firing_rate", histogram_json(report.rate_histogram)}};
  out << doc.dump(2) << '\n';
}

void write_phase_csv(std::ostream& out, const PhaseScanReport& report) {
  out << "delta,extinction_estimate,stderr,mean_extinction_time,censored_fraction,process\n";
  for (const auto& row : report.rows) {
    const auto& e = row.extinction;
    out << format_double(row.delta) << ',' << format_double(e.estimate) << ','
        << format_double(e.standard_error) << ',' << format_double(e.mean_extinction_time) << ','
        << format_double(e.censored_fraction) << ",linear_birth_death_comparison\n";
  }
}

void write_backward_trace_csv(std::ostream& out, std::span<const BackwardTraceRow> rows) {
  out << "index,neuron,time,mark,sure,clan_size,simulated_size\n";
  for (const auto& r : rows) {
    out << r.index << ',' << r.neuron << ',' << format_double(r.time) << ','
        << format_double(r.mark) << ',' << (r.sure ? 1 : 0) << ',' << r.clan_size << ','
        << r.simulated_size << '\n';
  }
}

void write_forward_trace_csv(std::ostream& out, std::span<const JumpResolution> rows) {
  out << "index,neuron,time,potential,resolution\n";
  for (const auto& r : rows) {
    out << r.index << ',' << r.neuron << ',' << format_double(r.time) << ','
        << format_double(r.potential) << ',' << to_string(r.resolution) << '\n';
  }
}

}  // namespace vlhawkes
