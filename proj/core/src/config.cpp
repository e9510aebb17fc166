#include "vlhawkes/config.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace vlhawkes {

namespace {

using nlohmann::json;

double number_field(const json& doc, const char* key, double fallback) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    return fallback;
  }
  if (!it->is_number()) {
    throw ConfigError(key, "must be a number");
  }
  return it->get<double>();
}

}  // namespace

NetworkConfig parse_network_config(std::string_view json_text, const NetworkConfig& base) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config", "top level must be an object");
  }
  static constexpr std::string_view known[] = {"beta_min", "beta_max", "W", "lambda", "range",
                                               "rate_table"};
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (auto k : known) {
      ok = ok || k == key;
    }
    if (!ok) {
      throw ConfigError(key, "unknown configuration key");
    }
  }

  const double beta_min = number_field(doc, "beta_min", base.rate.beta_min());
  const double beta_max = number_field(doc, "beta_max", base.rate.beta_max());
  const double weight = number_field(doc, "W", base.kernel.weight);
  const double decay = number_field(doc, "lambda", base.kernel.decay);

  NetworkConfig config = base;
  if (auto it = doc.find("range"); it != doc.end()) {
    if (!it->is_number_integer()) {
      throw ConfigError("range", "must be an integer");
    }
    const auto r = it->get<long long>();
    if (r < 1 || r > 1'000'000) {
      throw ConfigError("range", "must be a positive integer");
    }
    config.range = static_cast<int>(r);
  }
  config.kernel = InteractionKernel::power_law(weight, decay);

  if (auto it = doc.find("rate_table"); it != doc.end()) {
    if (!it->is_array()) {
      throw ConfigError("rate_table", "must be a list of [x, rate] pairs");
    }
    std::vector<RateKnot> knots;
    for (const auto& pair : *it) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
        throw ConfigError("rate_table", "must be a list of [x, rate] pairs");
      }
      knots.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    config.rate = RateFunction::table(beta_min, beta_max, std::move(knots));
  } else if (base.rate.family() == RateFunction::Family::Table) {
    config.rate = RateFunction::table(beta_min, beta_max, base.rate.knots());
  } else {
    config.rate = RateFunction::hyperbolic(beta_min, beta_max);
  }
  config.validate();
  return config;
}

NetworkConfig load_network_config(const std::string& path, const NetworkConfig& base) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config", "cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_network_config(buffer.str(), base);
}

std::string network_config_to_json(const NetworkConfig& config) {
  json doc;
  doc["beta_min"] = config.rate.beta_min();
  doc["beta_max"] = config.rate.beta_max();
  doc["W"] = config.kernel.weight;
  doc["lambda"] = config.kernel.decay;
  doc["range"] = config.range;
  if (config.rate.family() == RateFunction::Family::Table) {
    json table = json::array();
    for (const auto& knot : config.rate.knots()) {
      table.push_back({knot.x, knot.rate});
    }
    doc["rate_table"] = std::move(table);
  }
  return doc.dump();
}

}  // namespace vlhawkes
