#include "vlhawkes/stats.hpp"

#include <algorithm>
#include <cmath>

#include "vlhawkes/forward.hpp"
#include "vlhawkes/parallel.hpp"
#include "vlhawkes/random.hpp"

namespace vlhawkes {

ReplicateSummary run_replicate(const NetworkConfig& config, std::uint64_t master_seed,
                               std::uint64_t index, std::uint64_t budget, NeuronIndex target) {
  BackwardOptions options;
  options.target = target;
  options.budget = budget;
  const BackwardResult backward = backward_run(config, derive_seed(master_seed, index), options);

  ReplicateSummary summary;
  summary.seed_index = index;
  summary.backward_status = backward.status;
  summary.backward_steps = backward.jumps.size();
  if (!backward.terminated()) {
    return summary;
  }
  const auto jumps = chronological(backward);
  const ForwardResult forward = forward_run(jumps, config, target);
  summary.final_potential = forward.final_potential;
  summary.presyn_count = forward.presyn_count;
  summary.firing_rate = rate_eval(config.rate, forward.final_potential);
  return summary;
}

std::vector<ReplicateSummary> run_replicates(const NetworkConfig& config, std::uint64_t count,
                                             std::uint64_t master_seed,
                                             const ReplicateOptions& options) {
  if (count < 1) {
    throw ConfigError("replicates", "must be at least 1");
  }
  config.validate();
  std::vector<ReplicateSummary> out(count);
  parallel_for(out.size(), options.workers, [&](std::size_t k) {
    out[k] = run_replicate(config, master_seed, options.first_index + k, options.budget,
                           options.target);
  });
  return out;
}

Estimate zero_probability(std::span<const ReplicateSummary> summaries) {
  std::uint64_t n = 0;
  std::uint64_t zeros = 0;
  for (const auto& s : summaries) {
    if (s.terminated()) {
      ++n;
      zeros += *s.final_potential == 0.0 ? 1 : 0;
    }
  }
  if (n == 0) {
    throw DomainError("zero_probability needs at least one terminated replicate");
  }
  const double p = static_cast<double>(zeros) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

std::vector<double> presyn_pmf(std::span<const ReplicateSummary> summaries) {
  std::vector<std::uint64_t> counts;
  std::uint64_t n = 0;
  for (const auto& s : summaries) {
    if (!s.terminated()) {
      continue;
    }
    const std::size_t c = *s.presyn_count;
    if (c >= counts.size()) {
      counts.resize(c + 1, 0);
    }
    ++counts[c];
    ++n;
  }
  if (n == 0) {
    throw DomainError("presyn_pmf needs at least one terminated replicate");
  }
  std::vector<double> pmf(counts.size());
  std::transform(counts.begin(), counts.end(), pmf.begin(),
                 [n](std::uint64_t c) { return static_cast<double>(c) / static_cast<double>(n); });
  return pmf;
}

double presyn_tail(std::span<const ReplicateSummary> summaries, std::size_t k) {
  std::uint64_t n = 0;
  std::uint64_t hits = 0;
  for (const auto& s : summaries) {
    if (s.terminated()) {
      ++n;
      hits += *s.presyn_count >= k ? 1 : 0;
    }
  }
  if (n == 0) {
    throw DomainError("presyn_tail needs at least one terminated replicate");
  }
  return static_cast<double>(hits) / static_cast<double>(n);
}

Histogram Histogram::build(std::span<const double> values, double bin_width, double min,
                           double max) {
  if (!(bin_width > 0.0)) {
    throw DomainError("histogram bin width must be positive");
  }
  if (!(max > min)) {
    throw DomainError("histogram max must exceed min");
  }
  Histogram h;
  h.width_ = bin_width;
  h.min_ = min;
  h.max_ = max;
  const auto bins = static_cast<std::size_t>(std::ceil((max - min) / bin_width - 1e-9));
  h.counts_.assign(std::max<std::size_t>(bins, 1), 0);
  for (double v : values) {
    ++h.total_;
    if (v < min) {
      ++h.underflow_;
    } else if (v >= max) {
      ++h.overflow_;
    } else {
      auto bin = static_cast<std::size_t>(std::floor((v - min) / bin_width));
      ++h.counts_[std::min(bin, h.counts_.size() - 1)];
    }
  }
  return h;
}

double Histogram::density(std::size_t bin) const {
  if (total_ == 0) {
    return 0.0;
  }
  return static_cast<double>(counts_.at(bin)) / (static_cast<double>(total_) * width_);
}

StatsReport summarize(const NetworkConfig& config, std::span<const ReplicateSummary> summaries,
                      const HistogramSettings& settings) {
  StatsReport report;
  report.replicates = summaries.size();
  std::vector<double> potentials;
  std::vector<double> rates;
  potentials.reserve(summaries.size());
  rates.reserve(summaries.size());
  for (const auto& s : summaries) {
    if (s.terminated()) {
      potentials.push_back(*s.final_potential);
      rates.push_back(*s.firing_rate);
      report.max_presyn_count = std::max(report.max_presyn_count, *s.presyn_count);
    }
  }
  report.terminated = potentials.size();
  report.budget_exhausted = report.replicates - report.terminated;

  report.zero_probability = zero_probability(summaries);
  report.presyn_pmf = presyn_pmf(summaries);

  double sum = 0.0;
  for (double x : potentials) {
    report.max_potential = std::max(report.max_potential, x);
    sum += x;
  }
  report.mean_potential = sum / static_cast<double>(potentials.size());

  const double pw = settings.potential_width;
  const double potential_top = pw * (std::floor(report.max_potential / pw) + 1.0);
  report.potential_histogram = Histogram::build(potentials, pw, 0.0, potential_top);
  report.rate_histogram =
      Histogram::build(rates, settings.rate_width, config.rate.beta_min(),
                       config.rate.beta_max() + settings.rate_width);
  return report;
}

}  // namespace vlhawkes
