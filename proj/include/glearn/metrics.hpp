#pragma once

#include "glearn/glearner.hpp"
#include "glearn/market.hpp"
#include "glearn/rewards.hpp"

#include <vector>

namespace glearn {

struct WealthStats {
  double mean = 0.0;
  double stddev = 0.0;
  double q05 = 0.0;
  double q50 = 0.0;
  double q95 = 0.0;
};

struct PerformanceSummary {
  Vec mean_returns;  // path-averaged time-weighted return per period
  double sharpe = 0.0;
  WealthStats terminal_wealth;
  Vec shortfall;  // path-averaged (P_hat_{t+1} - V_{t+1})_+ per period
};

// Buy-and-hold of x0: no trades, positions move with realized returns only.
std::vector<Trajectory> equal_weight_baseline(const ReturnPaths& paths, const Vec& x0);

// Time-weighted return per period: (V_{t+1} - V_t - c_t) / (V_t + c_t).
// The installment c_t is a contribution, not an investment gain.
Vec period_returns(const Trajectory& traj);

// Annualized Sharpe ratio of a pooled series of per-period returns.
double sharpe_ratio(const std::vector<double>& returns, double rf_period, double dt);

// Pools the per-period returns of every trajectory; r_f is annual.
double sharpe(const std::vector<Trajectory>& trajs, double r_f, double dt);

// Path average of per-period returns.
Vec mean_period_returns(const std::vector<Trajectory>& trajs);

// Path average of the growth index prod_{s<=t} (1 + r_s), t = 0..T (index 1 at t = 0).
Vec mean_growth_index(const std::vector<Trajectory>& trajs);

// Path average of c_t.
Vec mean_cash(const std::vector<Trajectory>& trajs);

PerformanceSummary summarize(const std::vector<Trajectory>& trajs, double r_f, double dt,
                             const RewardParams& params, const BenchmarkPath& benchmark);

}  // namespace glearn
