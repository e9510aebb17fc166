#ifndef VLHAWKES_CONFIG_HPP
#define VLHAWKES_CONFIG_HPP

#include <string>
#include <string_view>

#include "vlhawkes/model.hpp"

namespace vlhawkes {

/// Parses a JSON object with any of the keys beta_min, beta_max, W, lambda,
/// range and rate_table (a list of [x, rate] pairs). Missing keys keep the
/// values of `base`. The result is validated; errors name the offending field.
NetworkConfig parse_network_config(std::string_view json_text,
                                   const NetworkConfig& base = NetworkConfig::defaults());

NetworkConfig load_network_config(const std::string& path,
                                  const NetworkConfig& base = NetworkConfig::defaults());

std::string network_config_to_json(const NetworkConfig& config);

}  // namespace vlhawkes

#endif  // VLHAWKES_CONFIG_HPP
