#ifndef VLHAWKES_MODEL_HPP
#define VLHAWKES_MODEL_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vlhawkes {

/// Index of a neuron on the integer lattice.
using NeuronIndex = std::int64_t;

/// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an estimator or formula is asked for a value outside its domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for invalid model or run configuration; carries the offending field name.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct RateKnot {
  double x;
  double rate;
};

/// Decreasing, bounded spiking rate function shared by every neuron.
///
/// Values satisfy beta_min < rate(x) <= beta_max for all x >= 0, and the
/// function is non-increasing. Two families are supported: the hyperbolic
/// form (beta_max + x beta_min) / (1 + x), and a table of knots joined by
/// piecewise-linear interpolation and held constant past the last knot.
class RateFunction {
 public:
  enum class Family { Hyperbolic, Table };

  static RateFunction hyperbolic(double beta_min, double beta_max);
  static RateFunction table(double beta_min, double beta_max, std::vector<RateKnot> knots);

  double beta_min() const noexcept { return beta_min_; }
  double beta_max() const noexcept { return beta_max_; }
  Family family() const noexcept { return family_; }
  const std::vector<RateKnot>& knots() const noexcept { return knots_; }

  /// Probability that an atom of the dominating process is a sure jump.
  double sure_probability() const noexcept { return beta_min_ / beta_max_; }

  double operator()(double x) const;

 private:
  RateFunction(double beta_min, double beta_max, Family family, std::vector<RateKnot> knots);

  double beta_min_;
  double beta_max_;
  Family family_;
  std::vector<RateKnot> knots_;
};

/// Power-law synaptic kernel weight * (1 + t)^(-decay).
struct InteractionKernel {
  double weight = 1.0;
  double decay = 2.0;

  static InteractionKernel power_law(double weight, double decay);
};

/// Homogeneous lattice network: every neuron interacts with the neurons
/// within `range` of it, through the same kernel and rate function.
struct NetworkConfig {
  int range = 1;
  InteractionKernel kernel{};
  RateFunction rate = RateFunction::hyperbolic(2.0, 3.0);

  /// beta_min = 2 Hz, beta_max = 3 Hz, W = 1, lambda = 2, nearest neighbours.
  static NetworkConfig defaults() { return NetworkConfig{}; }

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
};

double kernel_eval(const InteractionKernel& kernel, double elapsed);

double rate_eval(const RateFunction& rate, double potential);

/// Sum of kernel contributions at time `t` from presynaptic spikes strictly before `t`.
double potential_at(std::span<const double> presynaptic_times, double t,
                    const InteractionKernel& kernel);

/// {i - range, ..., i + range} without i, in increasing order.
std::vector<NeuronIndex> neighbors(const NetworkConfig& config, NeuronIndex i);

enum class Resolution { Sure, CandidateUnresolved, CandidateAccepted, CandidateRejected };

std::string_view to_string(Resolution resolution) noexcept;

/// One atom of the dominating Poisson process.
struct JumpRecord {
  std::uint64_t index = 0;  // generation order, starting at 1
  NeuronIndex neuron = 0;
  double time = 0.0;  // <= 0
  double mark = 0.0;  // uniform on [0, 1)
  Resolution resolution = Resolution::CandidateUnresolved;

  bool is_spike() const noexcept {
    return resolution == Resolution::Sure || resolution == Resolution::CandidateAccepted;
  }

  friend bool operator==(const JumpRecord&, const JumpRecord&) = default;
};

}  // namespace vlhawkes

#endif  // VLHAWKES_MODEL_HPP
