#include "vlhawkes/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vlhawkes {

namespace {

void check_rate_bounds(double beta_min, double beta_max) {
  if (!(std::isfinite(beta_min) && beta_min > 0.0)) {
    throw ConfigError("beta_min", "must be a finite positive rate");
  }
  if (!(std::isfinite(beta_max) && beta_max > beta_min)) {
    throw ConfigError("beta_max", "must be finite and strictly greater than beta_min");
  }
}

}  // namespace

RateFunction::RateFunction(double beta_min, double beta_max, Family family,
                           std::vector<RateKnot> knots)
    : beta_min_(beta_min), beta_max_(beta_max), family_(family), knots_(std::move(knots)) {}

RateFunction RateFunction::hyperbolic(double beta_min, double beta_max) {
  check_rate_bounds(beta_min, beta_max);
  return RateFunction(beta_min, beta_max, Family::Hyperbolic, {});
}

RateFunction RateFunction::table(double beta_min, double beta_max, std::vector<RateKnot> knots) {
  check_rate_bounds(beta_min, beta_max);
  if (knots.empty()) {
    throw ConfigError("rate_table", "needs at least one knot");
  }
  if (knots.front().x != 0.0) {
    throw ConfigError("rate_table", "first knot must sit at x = 0");
  }
  for (std::size_t k = 0; k < knots.size(); ++k) {
    const auto& knot = knots[k];
    if (!std::isfinite(knot.x) || !std::isfinite(knot.rate)) {
      throw ConfigError("rate_table", "knots must be finite");
    }
    if (!(knot.rate > beta_min && knot.rate <= beta_max)) {
      throw ConfigError("rate_table", "knot rates must lie in (beta_min, beta_max]");
    }
    if (k > 0) {
      if (!(knot.x > knots[k - 1].x)) {
        throw ConfigError("rate_table", "knot positions must be strictly increasing");
      }
      if (knot.rate > knots[k - 1].rate) {
        throw ConfigError("rate_table", "knot rates must be non-increasing");
      }
    }
  }
  return RateFunction(beta_min, beta_max, Family::Table, std::move(knots));
}

double RateFunction::operator()(double x) const {
  if (!(x >= 0.0)) {
    throw ContractViolation("rate function evaluated at a negative or NaN potential");
  }
  switch (family_) {
    case Family::Hyperbolic:
      // (beta_max + x beta_min) / (1 + x), written to stay accurate for large x.
      if (std::isinf(x)) {
        return beta_min_;
      }
      return beta_min_ + (beta_max_ - beta_min_) / (1.0 + x);
    case Family::Table: {
      auto upper = std::upper_bound(knots_.begin(), knots_.end(), x,
                                    [](double value, const RateKnot& knot) { return value < knot.x; });
      if (upper == knots_.end()) {
        return knots_.back().rate;
      }
      const auto& right = *upper;
      const auto& left = *(upper - 1);
      const double w = (x - left.x) / (right.x - left.x);
      const double value = left.rate + w * (right.rate - left.rate);
      return std::clamp(value, right.rate, left.rate);
    }
  }
  return beta_max_;
}

InteractionKernel InteractionKernel::power_law(double weight, double decay) {
  if (!(std::isfinite(weight) && weight > 0.0)) {
    throw ConfigError("W", "must be a finite positive weight");
  }
  if (!(std::isfinite(decay) && decay > 0.0)) {
    throw ConfigError("lambda", "must be a finite positive decay exponent");
  }
  return InteractionKernel{weight, decay};
}

void NetworkConfig::validate() const {
  if (range < 1) {
    throw ConfigError("range", "must be a positive integer");
  }
  InteractionKernel::power_law(kernel.weight, kernel.decay);
  check_rate_bounds(rate.beta_min(), rate.beta_max());
}

double kernel_eval(const InteractionKernel& kernel, double elapsed) {
  if (!(elapsed >= 0.0)) {
    throw ContractViolation("kernel evaluated at negative elapsed time");
  }
  return kernel.weight * std::pow(1.0 + elapsed, -kernel.decay);
}

double rate_eval(const RateFunction& rate, double potential) { return rate(potential); }

double potential_at(std::span<const double> presynaptic_times, double t,
                    const InteractionKernel& kernel) {
  double sum = 0.0;
  for (double s : presynaptic_times) {
    if (!(s < t)) {
      throw ContractViolation("presynaptic spike not strictly before evaluation time");
    }
    sum += kernel_eval(kernel, t - s);
  }
  return sum;
}

std::vector<NeuronIndex> neighbors(const NetworkConfig& config, NeuronIndex i) {
  std::vector<NeuronIndex> out;
  out.reserve(2 * static_cast<std::size_t>(config.range));
  for (NeuronIndex k = i - config.range; k <= i + config.range; ++k) {
    if (k != i) {
      out.push_back(k);
    }
  }
  return out;
}

std::string_view to_string(Resolution resolution) noexcept {
  switch (resolution) {
    case Resolution::Sure:
      return "sure";
    case Resolution::CandidateUnresolved:
      return "candidate_unresolved";
    case Resolution::CandidateAccepted:
      return "candidate_accepted";
    case Resolution::CandidateRejected:
      return "candidate_rejected";
  }
  return "unknown";
}

}  // namespace vlhawkes
