#include "vlhawkes/phase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vlhawkes/model.hpp"
#include "vlhawkes/parallel.hpp"
#include "vlhawkes/random.hpp"

namespace vlhawkes {

double delta_of(double beta_min, double beta_max) {
  if (!(beta_min > 0.0 && beta_min < beta_max && std::isfinite(beta_max))) {
    throw DomainError("delta_of needs 0 < beta_min < beta_max < infinity");
  }
  return beta_min / (beta_max - beta_min);
}

void BranchingConfig::validate() const {
  if (!(std::isfinite(delta) && delta > 0.0)) {
    throw ConfigError("delta", "must be a finite positive number");
  }
  if (!(horizon > 0.0)) {
    throw ConfigError("horizon", "must be positive");
  }
  if (cap < 1) {
    throw ConfigError("cap", "must be at least 1");
  }
  if (replicates < 1) {
    throw ConfigError("replicates", "must be at least 1");
  }
}

BranchingOutcome branching_simulate(const BranchingConfig& config, std::uint64_t seed) {
  config.validate();
  RandomStream rng(seed);
  const double up_probability = 1.0 / (1.0 + config.delta);

  BranchingOutcome out;
  std::uint64_t n = config.initial;
  out.max_population = n;
  if (n == 0) {
    out.extinct = true;
    return out;
  }
  double t = 0.0;
  for (;;) {
    t += rng.exponential(static_cast<double>(n) * (1.0 + config.delta));
    if (t > config.horizon) {
      out.censored = true;
      out.time = config.horizon;
      return out;
    }
    ++out.events;
    if (rng.uniform() < up_probability) {
      ++n;
      ++out.up_moves;
      out.max_population = std::max(out.max_population, n);
      if (n > config.cap) {
        out.censored = true;
        out.time = t;
        return out;
      }
    } else if (--n == 0) {
      out.extinct = true;
      out.time = t;
      return out;
    }
  }
}

ExtinctionEstimate extinction_probability(const BranchingConfig& config, std::uint64_t seed,
                                          unsigned workers) {
  config.validate();
  std::vector<BranchingOutcome> outcomes(config.replicates);
  parallel_for(outcomes.size(), workers,
               [&](std::size_t k) { outcomes[k] = branching_simulate(config, derive_seed(seed, k)); });

  std::uint64_t extinct = 0;
  std::uint64_t censored = 0;
  double time_sum = 0.0;
  for (const auto& o : outcomes) {
    if (o.extinct) {
      ++extinct;
      time_sum += o.time;
    }
    censored += o.censored ? 1 : 0;
  }
  const double r = static_cast<double>(config.replicates);
  ExtinctionEstimate est;
  est.replicates = config.replicates;
  est.estimate = static_cast<double>(extinct) / r;
  est.standard_error = std::sqrt(est.estimate * (1.0 - est.estimate) / r);
  est.mean_extinction_time = extinct > 0 ? time_sum / static_cast<double>(extinct)
                                         : std::numeric_limits<double>::quiet_NaN();
  est.censored_fraction = static_cast<double>(censored) / r;
  return est;
}

PhaseScanReport delta_scan(std::span<const double> grid, const BranchingConfig& base,
                           std::uint64_t seed, unsigned workers) {
  if (grid.empty()) {
    throw ConfigError("grid", "needs at least one delta");
  }
  for (double d : grid) {
    if (!(std::isfinite(d) && d > 0.0)) {
      throw ConfigError("grid", "every delta must be a finite positive number");
    }
  }
  std::vector<double> deltas(grid.begin(), grid.end());
  std::sort(deltas.begin(), deltas.end());

  PhaseScanReport report;
  for (std::size_t g = 0; g < deltas.size(); ++g) {
    BranchingConfig point = base;
    point.delta = deltas[g];
    report.rows.push_back(
        {deltas[g], extinction_probability(point, derive_seed(seed, 0x5CA7ULL + g), workers)});
  }
  return report;
}

}  // namespace vlhawkes
