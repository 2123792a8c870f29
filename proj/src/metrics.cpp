#include "glearn/metrics.hpp"

#include "glearn/error.hpp"

#include <algorithm>
#include <cmath>

namespace glearn {

namespace {

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

void require_nonempty(const std::vector<Trajectory>& trajs) {
  if (trajs.empty()) throw ShapeError("metrics: no trajectories");
}

}  // namespace

std::vector<Trajectory> equal_weight_baseline(const ReturnPaths& paths, const Vec& x0) {
  paths.validate_shape();
  const int n = paths.n_assets();
  if (x0.size() != n) throw ShapeError("equal_weight_baseline: x0 size mismatch");
  std::vector<Trajectory> out(paths.n_paths);
  for (int p = 0; p < paths.n_paths; ++p) {
    Trajectory& tr = out[p];
    tr.x.resize(paths.horizon + 1, n);
    tr.u = Mat::Zero(paths.horizon, n);
    tr.cash = Vec::Zero(paths.horizon);
    tr.x.row(0) = x0.transpose();
    for (int t = 0; t < paths.horizon; ++t) {
      const Vec r = paths.realized_full(p, t);
      tr.x.row(t + 1) = tr.x.row(t).cwiseProduct((Vec::Ones(n) + r).transpose());
    }
  }
  return out;
}

Vec period_returns(const Trajectory& traj) {
  const int horizon = traj.horizon();
  Vec r(horizon);
  for (int t = 0; t < horizon; ++t) {
    const double invested = traj.x.row(t).sum() + traj.cash[t];
    r[t] = (traj.x.row(t + 1).sum() - invested) / invested;
  }
  return r;
}

double sharpe_ratio(const std::vector<double>& returns, double rf_period, double dt) {
  if (returns.size() < 2) throw UndefinedSharpeError("sharpe: need at least two periods");
  double mean = 0.0;
  for (double r : returns) mean += r - rf_period;
  mean /= static_cast<double>(returns.size());
  double ss = 0.0;
  for (double r : returns) {
    const double d = r - rf_period - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / static_cast<double>(returns.size() - 1));
  if (!(sd > 1e-14 * std::max(1.0, std::abs(mean))))
    throw UndefinedSharpeError("sharpe: excess returns have zero variance");
  return mean / sd * std::sqrt(1.0 / dt);
}

double sharpe(const std::vector<Trajectory>& trajs, double r_f, double dt) {
  require_nonempty(trajs);
  std::vector<double> pooled;
  pooled.reserve(trajs.size() * static_cast<std::size_t>(trajs.front().horizon()));
  for (const auto& tr : trajs) {
    const Vec r = period_returns(tr);
    pooled.insert(pooled.end(), r.data(), r.data() + r.size());
  }
  return sharpe_ratio(pooled, r_f * dt, dt);
}

Vec mean_period_returns(const std::vector<Trajectory>& trajs) {
  require_nonempty(trajs);
  Vec acc = Vec::Zero(trajs.front().horizon());
  for (const auto& tr : trajs) acc += period_returns(tr);
  return acc / static_cast<double>(trajs.size());
}

Vec mean_growth_index(const std::vector<Trajectory>& trajs) {
  require_nonempty(trajs);
  const int horizon = trajs.front().horizon();
  Vec acc = Vec::Zero(horizon + 1);
  for (const auto& tr : trajs) {
    const Vec r = period_returns(tr);
    double g = 1.0;
    acc[0] += g;
    for (int t = 0; t < horizon; ++t) {
      g *= 1.0 + r[t];
      acc[t + 1] += g;
    }
  }
  return acc / static_cast<double>(trajs.size());
}

Vec mean_cash(const std::vector<Trajectory>& trajs) {
  require_nonempty(trajs);
  Vec acc = Vec::Zero(trajs.front().horizon());
  for (const auto& tr : trajs) acc += tr.cash;
  return acc / static_cast<double>(trajs.size());
}

PerformanceSummary summarize(const std::vector<Trajectory>& trajs, double r_f, double dt,
                             const RewardParams& params, const BenchmarkPath& benchmark) {
  require_nonempty(trajs);
  const int horizon = trajs.front().horizon();
  if (benchmark.b.size() != horizon) throw ShapeError("summarize: benchmark horizon mismatch");

  PerformanceSummary s;
  s.mean_returns = mean_period_returns(trajs);
  s.sharpe = sharpe(trajs, r_f, dt);

  std::vector<double> terminal;
  terminal.reserve(trajs.size());
  s.shortfall = Vec::Zero(horizon);
  for (const auto& tr : trajs) {
    terminal.push_back(tr.x.row(horizon).sum());
    for (int t = 0; t < horizon; ++t) {
      const double target = target_portfolio(params, benchmark.b[t], tr.x.row(t).transpose());
      s.shortfall[t] += std::max(target - tr.x.row(t + 1).sum(), 0.0);
    }
  }
  s.shortfall /= static_cast<double>(trajs.size());

  double mean = 0.0;
  for (double w : terminal) mean += w;
  mean /= static_cast<double>(terminal.size());
  double ss = 0.0;
  for (double w : terminal) ss += (w - mean) * (w - mean);
  s.terminal_wealth.mean = mean;
  s.terminal_wealth.stddev = terminal.size() > 1 ? std::sqrt(ss / static_cast<double>(terminal.size() - 1)) : 0.0;
  s.terminal_wealth.q05 = quantile(terminal, 0.05);
  s.terminal_wealth.q50 = quantile(terminal, 0.50);
  s.terminal_wealth.q95 = quantile(terminal, 0.95);
  return s;
}

}  // namespace glearn
