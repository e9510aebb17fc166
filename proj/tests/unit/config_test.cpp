#include <gtest/gtest.h>

#include "vlhawkes/config.hpp"

namespace vlhawkes {
namespace {

std::string field_of(std::string_view json) {
  try {
    parse_network_config(json);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "";
}

TEST(ParseNetworkConfig, DefaultsAndOverrides) {
  const auto config = parse_network_config(R"({"lambda": 0.1, "range": 2})");
  EXPECT_DOUBLE_EQ(config.rate.beta_min(), 2.0);
  EXPECT_DOUBLE_EQ(config.rate.beta_max(), 3.0);
  EXPECT_DOUBLE_EQ(config.kernel.weight, 1.0);
  EXPECT_DOUBLE_EQ(config.kernel.decay, 0.1);
  EXPECT_EQ(config.range, 2);
}

TEST(ParseNetworkConfig, ErrorsNameTheField) {
  EXPECT_EQ(field_of(R"({"beta_min": 3, "beta_max": 3})"), "beta_max");
  EXPECT_EQ(field_of(R"({"beta_min": -1})"), "beta_min");
  EXPECT_EQ(field_of(R"({"W": 0})"), "W");
  EXPECT_EQ(field_of(R"({"lambda": "two"})"), "lambda");
  EXPECT_EQ(field_of(R"({"range": 1.5})"), "range");
  EXPECT_EQ(field_of(R"({"range": 0})"), "range");
  EXPECT_EQ(field_of(R"({"gamma": 1})"), "gamma");
  EXPECT_EQ(field_of(R"([1, 2])"), "config");
  EXPECT_EQ(field_of(R"({"beta_min": )"), "config");
  EXPECT_EQ(field_of(R"({"rate_table": [[0, 9]]})"), "rate_table");
}

TEST(ParseNetworkConfig, RateTableRoundTrips) {
  const auto config =
      parse_network_config(R"({"beta_min": 1, "beta_max": 4, "rate_table": [[0, 4], [2, 2]]})");
  EXPECT_EQ(config.rate.family(), RateFunction::Family::Table);
  EXPECT_DOUBLE_EQ(config.rate(1.0), 3.0);
  const auto again = parse_network_config(network_config_to_json(config));
  EXPECT_EQ(again.rate.knots().size(), 2u);
  EXPECT_DOUBLE_EQ(again.rate(1.0), 3.0);
}

TEST(LoadNetworkConfig, MissingFile) {
  EXPECT_THROW(load_network_config("/nonexistent/cfg.json"), ConfigError);
}

}  // namespace
}  // namespace vlhawkes
