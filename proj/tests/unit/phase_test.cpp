#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "vlhawkes/backward.hpp"
#include "vlhawkes/phase.hpp"
#include "vlhawkes/random.hpp"

namespace vlhawkes {
namespace {

TEST(DeltaOf, Values) {
  EXPECT_DOUBLE_EQ(delta_of(2.0, 3.0), 2.0);
  EXPECT_DOUBLE_EQ(delta_of(1.0, 2.0), 1.0);
  EXPECT_NEAR(delta_of(0.3, 3.0), 1.0 / 9.0, 1e-15);
  EXPECT_THROW(delta_of(3.0, 3.0), DomainError);
  EXPECT_THROW(delta_of(4.0, 3.0), DomainError);
  EXPECT_THROW(delta_of(0.0, 3.0), DomainError);
}

TEST(ExtinctionRootOracle, MatchesMinOfOneAndDelta) {
  for (double d : {0.1, 0.25, 0.5, 0.75, 0.99, 1.0, 1.5, 2.0, 10.0}) {
    EXPECT_NEAR(oracle::extinction_root(d), std::min(1.0, d), 1e-7) << d;
  }
}

TEST(BranchingSimulate, EmptyStartIsExtinctAtZero) {
  BranchingConfig config;
  config.initial = 0;
  const auto out = branching_simulate(config, 1);
  EXPECT_TRUE(out.extinct);
  EXPECT_EQ(out.time, 0.0);
  EXPECT_EQ(out.events, 0u);
}

TEST(BranchingSimulate, FirstMoveDownIsImmediateExtinction) {
  BranchingConfig config;
  config.delta = 1.0;
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto out = branching_simulate(config, seed);
    if (out.events == 1) {
      ++seen;
      EXPECT_TRUE(out.extinct);
      EXPECT_EQ(out.max_population, 1u);
      EXPECT_GT(out.time, 0.0);
    }
  }
  EXPECT_GT(seen, 50);
}

TEST(BranchingSimulate, ValidatesConfig) {
  BranchingConfig config;
  config.delta = 0.0;
  EXPECT_THROW(branching_simulate(config, 1), ConfigError);
  config.delta = 1.0;
  config.horizon = 0.0;
  EXPECT_THROW(branching_simulate(config, 1), ConfigError);
}

TEST(BranchingSimulate, CapAndHorizonCensor) {
  BranchingConfig config;
  config.delta = 0.1;
  config.cap = 5;
  config.initial = 5;
  const auto capped = branching_simulate(config, 3);
  EXPECT_TRUE(capped.censored || capped.extinct);
  config.cap = 1'000'000;
  config.horizon = 1e-9;
  const auto timed = branching_simulate(config, 3);
  EXPECT_TRUE(timed.censored);
  EXPECT_EQ(timed.time, 1e-9);
}

TEST(BranchingSimulate, EmbeddedChainUpFrequency) {
  BranchingConfig config;
  config.delta = 0.8;
  config.initial = 1000;
  config.horizon = 0.5;
  config.cap = 10'000'000;
  std::uint64_t events = 0;
  std::uint64_t ups = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto out = branching_simulate(config, seed);
    events += out.events;
    ups += out.up_moves;
  }
  const double p = 1.0 / 1.8;
  const double n = static_cast<double>(events);
  EXPECT_NEAR(static_cast<double>(ups) / n, p, 3 * std::sqrt(p * (1 - p) / n));
}

TEST(ExtinctionProbability, MatchesOracle) {
  BranchingConfig config;
  config.replicates = 100'000;
  config.cap = 1'000;  // extinction from 1000 has probability delta^1000 here
  for (double d : {0.5, 1.5, 2.0}) {
    config.delta = d;
    const auto est = extinction_probability(config, 17);
    const double q = oracle::extinction_root(d);
    if (q == 1.0) {
      EXPECT_GT(est.estimate, 0.999) << d;
      EXPECT_LT(est.censored_fraction, 0.001) << d;
    } else {
      EXPECT_NEAR(est.estimate, q, std::max(3 * est.standard_error, 0.005)) << d;
    }
    EXPECT_EQ(est.replicates, 100'000u);
  }
}

TEST(ExtinctionProbability, WorkerCountDoesNotMatter) {
  BranchingConfig config;
  config.delta = 0.7;
  config.replicates = 5'000;
  config.cap = 500;
  const auto a = extinction_probability(config, 5, 1);
  const auto b = extinction_probability(config, 5, 4);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.mean_extinction_time, b.mean_extinction_time);
}

TEST(DeltaScan, GridOfEstimates) {
  BranchingConfig base;
  base.replicates = 20'000;
  base.cap = 1'000;
  const std::vector<double> grid{2.0, 0.25, 1.25, 0.5, 1.5, 0.75};
  const auto report = delta_scan(grid, base, 8);
  ASSERT_EQ(report.rows.size(), grid.size());
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const auto& row = report.rows[k];
    if (k > 0) {
      EXPECT_GT(row.delta, report.rows[k - 1].delta);
      EXPECT_GE(row.extinction.estimate + 2 * row.extinction.standard_error +
                    2 * report.rows[k - 1].extinction.standard_error,
                report.rows[k - 1].extinction.estimate);
    }
    EXPECT_GE(row.extinction.estimate, 0.0);
    EXPECT_LE(row.extinction.estimate, 1.0);
    EXPECT_NEAR(row.extinction.estimate, std::min(1.0, row.delta),
                std::max(4 * row.extinction.standard_error, 0.002));
  }
}

TEST(DeltaScan, RejectsBadGrids) {
  BranchingConfig base;
  EXPECT_THROW(delta_scan({}, base, 1), ConfigError);
  const std::vector<double> bad{1.0, -0.5};
  EXPECT_THROW(delta_scan(bad, base, 1), ConfigError);
}

TEST(CrossModule, SupercriticalBackwardAndBranchingBothTerminate) {
  NetworkConfig network;
  BranchingConfig config;
  config.delta = delta_of(network.rate.beta_min(), network.rate.beta_max());
  config.replicates = 10'000;
  EXPECT_EQ(extinction_probability(config, 1).estimate, 1.0);
  int terminated = 0;
  for (int k = 0; k < 10'000; ++k) {
    terminated += backward_run(network, derive_seed(1, k)).terminated() ? 1 : 0;
  }
  EXPECT_EQ(terminated, 10'000);
}

}  // namespace
}  // namespace vlhawkes
