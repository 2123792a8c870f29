#pragma once

#include "glearn/linalg.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace glearn {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Single-factor market with a CAPM-style alpha model. Rates and volatilities
// are annual; dt converts them to one rebalancing period.
struct MarketSpec {
  int n_risky = 99;
  double r_f = 0.02;
  double mu_m = 0.05;
  double sigma_m = 0.25;
  double sigma_i = 0.05;
  double dt = 0.25;
  double oracle_c = 0.2;
  Interval alpha_range{-0.05, 0.15};
  Interval beta_range{0.05, 0.85};
  Interval price_range{20.0, 120.0};
  int n_paths = 1000;
  int horizon = 30;
  std::uint64_t seed = 42;
  // Draws from alpha_range are annual rates, scaled by dt per period.
  // When false they are taken as per-period rates.
  bool alpha_annualized = true;
  // Use r_M = exp((mu - sigma^2/2) dt + sigma sqrt(dt) Z) - 1 instead of the
  // arithmetic increment mu dt + sigma sqrt(dt) Z.
  bool exponential_gbm = false;

  void validate() const;
  double bond_return() const { return r_f * dt; }
};

// Per-experiment draws shared by all paths.
struct Universe {
  Vec alpha;
  Vec beta;
  Vec prices;  // recorded only; positions are dollar valued
};

// expected[p] and realized[p] are horizon x n_risky; market is n_paths x horizon.
struct ReturnPaths {
  int n_paths = 0;
  int horizon = 0;
  int n_risky = 0;
  double bond_return = 0.0;
  Universe universe;
  std::vector<Mat> expected;
  std::vector<Mat> realized;
  Mat market;

  // Number of tradable assets including the bond at index 0.
  int n_assets() const { return n_risky + 1; }
  // Full N-vector of realized returns for path p, period t (bond first).
  Vec realized_full(int path, int t) const;
  void validate_shape() const;
};

struct ReturnCovariance {
  Mat sigma_r;
};

// Independent engine for (seed, stream, index); identical inputs give
// identical draws regardless of evaluation order.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

ReturnPaths simulate(const MarketSpec& spec);

ReturnCovariance residual_covariance(const ReturnPaths& paths);

// Cross-path mean of expected returns per period, as N-vectors with the
// per-period bond return in slot 0. This is the alpha signal the solver sees.
std::vector<Vec> expected_return_path(const ReturnPaths& paths);

// Per-asset sample means over paths and periods: (expected, realized).
std::pair<Vec, Vec> asset_mean_returns(const ReturnPaths& paths);

}  // namespace glearn
