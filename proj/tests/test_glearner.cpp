#include "glearn/error.hpp"
#include "glearn/glearner.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace glearn;
using namespace glearn::testing;

namespace {

SolverConfig config(double beta, double gamma = 0.95) {
  SolverConfig c;
  c.beta = beta;
  c.gamma = gamma;
  return c;
}

SolvedPlan solve_problem(const Problem& pr, const SolverConfig& cfg) {
  return solve(pr.params, pr.rbar, pr.cov, pr.bench, pr.prior, cfg);
}

Vec random_state(std::mt19937_64& rng, int n) {
  Vec x(n);
  for (int i = 0; i < n; ++i) x[i] = uniform(rng, 0.0, 400.0 / n);
  return x;
}

Vec random_action(std::mt19937_64& rng, int n) {
  Vec u(n);
  for (int i = 0; i < n; ++i) u[i] = uniform(rng, -20.0, 20.0);
  return u;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Dense numerical maximizer for N = 2: shrinking grid search, then one exact quadratic step.
Vec brute_force_argmax(const std::function<double(const Vec&)>& f) {
  Vec center = Vec::Zero(2);
  double half = 1000.0;
  for (int round = 0; round < 40; ++round) {
    Vec best = center;
    double best_v = f(center);
    for (int i = -10; i <= 10; ++i)
      for (int j = -10; j <= 10; ++j) {
        Vec u(2);
        u << center[0] + half * i / 10.0, center[1] + half * j / 10.0;
        const double v = f(u);
        if (v > best_v) {
          best_v = v;
          best = u;
        }
      }
    center = best;
    half *= 0.3;
  }
  const Quadratic q = polarize([&](const Vec& d) { return f(center + d); }, 2, 1.0);
  return center + quadratic_argmax(q);
}

}  // namespace

TEST(TerminalAction, StationaryAtZero) {
  std::mt19937_64 rng(21);
  const Instance inst = random_instance(rng, 3);
  const RewardCoeffs c = build_coeffs(inst.params, inst.rbar, inst.cov, inst.b);
  const Vec x = c.r_ux.fullPivLu().solve(-c.r_u);
  EXPECT_LT(terminal_action(c, inst.params, x).norm(), 1e-8 * std::max(1.0, x.norm()));
}

TEST(TerminalAction, MatchesBruteForceArgmax) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 5; ++k) {
    const Instance inst = random_instance(rng, 2);
    const RewardCoeffs c = build_coeffs(inst.params, inst.rbar, inst.cov, inst.b);
    const Vec got = terminal_action(c, inst.params, inst.x);
    const Vec want = brute_force_argmax(
        [&](const Vec& u) { return expected_reward(inst.params, inst.rbar, inst.cov.sigma_r, inst.b, inst.x, u); });
    EXPECT_LT((got - want).norm(), 1e-8 * std::max(1.0, want.norm())) << "instance " << k;
  }
}

TEST(TerminalAction, LargerCostsShrinkTrades) {
  std::mt19937_64 rng(23);
  const Instance inst = random_instance(rng, 3);
  double prev = std::numeric_limits<double>::infinity();
  for (double kappa : {1.0, 10.0, 100.0, 1000.0}) {
    RewardParams p = inst.params;
    p.omega *= kappa;
    const RewardCoeffs c = build_coeffs(p, inst.rbar, inst.cov, inst.b);
    const double norm = terminal_action(c, p, inst.x).norm();
    EXPECT_LT(norm, prev) << "kappa " << kappa;
    prev = norm;
  }
}

TEST(BackwardPass, SingleStepIsTerminalMaximum) {
  std::mt19937_64 rng(24);
  const Problem pr = random_problem(rng, 3, 1, 10.0);
  const SolvedPlan plan = solve_problem(pr, config(1000.0));
  ASSERT_EQ(plan.horizon, 1);
  const auto value = [&](const Vec& x) {
    const Vec u = quadratic_argmax(polarize(
        [&](const Vec& v) { return expected_reward(pr.params, pr.rbar[0], pr.cov.sigma_r, pr.bench.b[0], x, v); },
        3, 50.0));
    return expected_reward(pr.params, pr.rbar[0], pr.cov.sigma_r, pr.bench.b[0], x, u);
  };
  const Quadratic q = polarize(value, 3, 50.0);
  const FCoeffs& f = plan.f[0];
  EXPECT_LT((f.f_xx - 0.5 * q.hess).cwiseAbs().maxCoeff(), 1e-9 * (1.0 + q.hess.cwiseAbs().maxCoeff()));
  EXPECT_LT((f.f_x - q.grad).cwiseAbs().maxCoeff(), 1e-8 * (1.0 + q.grad.cwiseAbs().maxCoeff()));
  EXPECT_LT(rel(f.f_0, q.c), 1e-10);
  EXPECT_DOUBLE_EQ(free_energy(plan, 0, Vec::Zero(3)), f.f_0);
}

TEST(BackwardPass, NearDeterministicLimitMatchesDynamicProgram) {
  std::mt19937_64 rng(25);
  const Problem pr = random_problem(rng, 2, 3, 10.0);
  const SolvedPlan plan = solve_problem(pr, config(1e6));
  const DeterministicDp dp(pr.params, pr.rbar, pr.cov.sigma_r, pr.bench.b, 0.95);
  for (int t = 0; t < 3; ++t) {
    const Vec x = random_state(rng, 2);
    const Vec want = dp.action(t, x);
    const Vec got = plan.policy[t].mean(x);
    EXPECT_LT((got - want).norm(), 1e-4 * std::max(1.0, want.norm())) << "t=" << t;
  }
}

TEST(BackwardPass, PosteriorMeansApproachDynamicProgramMonotonically) {
  std::mt19937_64 rng(26);
  const Problem pr = random_problem(rng, 2, 3, 10.0);
  const DeterministicDp dp(pr.params, pr.rbar, pr.cov.sigma_r, pr.bench.b, 0.95);
  const Vec x = random_state(rng, 2);
  for (int t = 0; t < 3; ++t) {
    const Vec want = dp.action(t, x);
    double prev = std::numeric_limits<double>::infinity();
    for (double beta : {10.0, 100.0, 1000.0, 10000.0}) {
      const SolvedPlan plan = solve_problem(pr, config(beta));
      const double gap = (plan.policy[t].mean(x) - want).norm();
      EXPECT_LT(gap, prev) << "t=" << t << " beta=" << beta;
      prev = gap;
    }
  }
}

TEST(BackwardPass, VanishingTemperatureKeepsPrior) {
  std::mt19937_64 rng(27);
  Problem pr = random_problem(rng, 3, 4, 2.0);
  for (int t = 0; t < 4; ++t) {
    pr.prior.u_bar[t] = Vec::Constant(3, 1.5);
    pr.prior.v_bar[t] = 0.01 * Mat::Ones(3, 3);
  }
  const SolvedPlan plan = solve_problem(pr, config(1e-12));
  for (int t = 0; t < 4; ++t) {
    EXPECT_LT((plan.policy[t].u_tilde - pr.prior.u_bar[t]).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LT((plan.policy[t].v_tilde - pr.prior.v_bar[t]).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LT((plan.policy[t].sigma_tilde - pr.prior.sigma_p).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(BackwardPass, BellmanIdentityClosedForm) {
  std::mt19937_64 rng(28);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 2;
    const int horizon = 2 + k % 3;
    const Problem pr = random_problem(rng, n, horizon, 10.0);
    const SolvedPlan plan = solve_problem(pr, config(uniform(rng, 1.0, 1000.0), uniform(rng, 0.5, 1.0)));
    for (int t = 0; t + 1 < horizon; ++t) {
      const Vec x = random_state(rng, n);
      const Vec u = random_action(rng, n);
      const FCoeffs& nf = plan.f[t + 1];
      const double want = expected_reward(pr.params, pr.rbar[t], pr.cov.sigma_r, pr.bench.b[t], x, u) +
                          plan.cfg.gamma * expected_quadratic(nf.f_xx, nf.f_x, nf.f_0, pr.rbar[t], pr.cov.sigma_r, x + u);
      EXPECT_LT(rel(g_value(plan, t, x, u), want), 1e-10) << "instance " << k << " t=" << t;
    }
  }
}

TEST(BackwardPass, StrictModeBreaksBellmanIdentity) {
  std::mt19937_64 rng(29);
  const Problem pr = random_problem(rng, 3, 3, 10.0);
  SolverConfig cfg = config(100.0);
  cfg.omega_mode = OmegaMode::strict_paper;
  const SolvedPlan plan = solve_problem(pr, cfg);
  const Vec x = random_state(rng, 3);
  const Vec u = random_action(rng, 3);
  const FCoeffs& nf = plan.f[1];
  const double want = expected_reward(pr.params, pr.rbar[0], pr.cov.sigma_r, pr.bench.b[0], x, u) +
                      0.95 * expected_quadratic(nf.f_xx, nf.f_x, nf.f_0, pr.rbar[0], pr.cov.sigma_r, x + u);
  EXPECT_GT(rel(g_value(plan, 0, x, u), want), 1e-6);
}

TEST(BackwardPass, BellmanIdentityMonteCarlo) {
  std::mt19937_64 rng(30);
  const Problem pr = random_problem(rng, 2, 3, 10.0);
  const SolvedPlan plan = solve_problem(pr, config(100.0));
  const Vec x = random_state(rng, 2);
  const Vec u = random_action(rng, 2);
  const int draws = 100000;
  const double sd = std::sqrt(pr.cov.sigma_r(0, 0));
  std::normal_distribution<double> normal;
  double sum = 0.0, sum2 = 0.0;
  for (int k = 0; k < draws; ++k) {
    Vec r = pr.rbar[0];
    r[1] += sd * normal(rng);
    const Vec xn = (Vec::Ones(2) + r).cwiseProduct(x + u);
    const double v = free_energy(plan, 1, xn);
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / draws;
  const double se = std::sqrt((sum2 / draws - mean * mean) / draws);
  const double want = expected_reward(pr.params, pr.rbar[0], pr.cov.sigma_r, pr.bench.b[0], x, u) + 0.95 * mean;
  EXPECT_NEAR(g_value(plan, 0, x, u), want, 3.0 * 0.95 * se);
}

TEST(BackwardPass, MyopicLimit) {
  std::mt19937_64 rng(31);
  const Problem pr = random_problem(rng, 3, 3, 10.0);
  SolverConfig cfg = config(100.0, 1.0);
  cfg.gamma = 1e-300;
  const SolvedPlan plan = solve_problem(pr, cfg);
  const Vec x = random_state(rng, 3);
  const Vec u = random_action(rng, 3);
  EXPECT_LT(rel(g_value(plan, 0, x, u), reward_value(plan.reward[0], x, u)), 1e-12);
}

TEST(BackwardPass, HadamardExpectationIdentity) {
  std::mt19937_64 rng(32);
  const Instance inst = random_instance(rng, 3);
  const Mat f = random_spd(rng, 3, 1.0);
  const Vec z = inst.x + inst.u;
  const Mat sigma_hat = build_coeffs(inst.params, inst.rbar, inst.cov, inst.b).sigma_hat;
  const double want = expected_quadratic(f, Vec::Zero(3), 0.0, inst.rbar, inst.cov.sigma_r, z);
  EXPECT_LT(rel(z.dot(sigma_hat.cwiseProduct(f) * z), want), 1e-12);
}

TEST(BackwardPass, PosteriorCompletesTheSquare) {
  std::mt19937_64 rng(33);
  Problem pr = random_problem(rng, 3, 3, 1.0);
  for (int t = 0; t < 3; ++t) {
    pr.prior.u_bar[t] = Vec::Constant(3, 0.7);
    pr.prior.v_bar[t] = 0.02 * Mat::Identity(3, 3);
  }
  const double beta = 2.0;
  const SolvedPlan plan = solve_problem(pr, config(beta));
  const Mat sp_inv = pr.prior.sigma_p.inverse();
  for (int t = 0; t < 3; ++t) {
    const Vec x = random_state(rng, 3);
    const Vec m0 = pr.prior.u_bar[t] + pr.prior.v_bar[t] * x;
    const auto log_kernel = [&](const Vec& u) {
      return beta * g_value(plan, t, x, u) - 0.5 * (u - m0).dot(sp_inv * (u - m0));
    };
    const Quadratic q = polarize(log_kernel, 3, 1.0);
    const Mat cov = (-q.hess).inverse();
    const Vec mean = quadratic_argmax(q);
    EXPECT_LT((plan.policy[t].sigma_tilde - cov).norm() / cov.norm(), 1e-8) << "t=" << t;
    EXPECT_LT((plan.policy[t].mean(x) - mean).norm() / std::max(1.0, mean.norm()), 1e-8) << "t=" << t;
  }
}

TEST(FreeEnergy, MatchesMonteCarloGaussianIntegral) {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 5; ++k) {
    const Problem pr = random_problem(rng, 2, 2, 1.0);
    const double beta = 1.0;
    const SolvedPlan plan = solve_problem(pr, config(beta));
    const Vec x = random_state(rng, 2);
    for (int t = 0; t < 2; ++t) {
      const McEstimate mc = importance_free_energy([&](const Vec& u) { return g_value(plan, t, x, u); },
                                                   pr.prior.u_bar[t] + pr.prior.v_bar[t] * x, pr.prior.sigma_p, beta,
                                                   rng, 200000);
      EXPECT_NEAR(plan.f_soft[t](x), mc.value, 3.0 * mc.se) << "instance " << k << " t=" << t;
    }
  }
}

TEST(FreeEnergy, MatchesQuadrature) {
  std::mt19937_64 rng(35);
  const Problem pr = random_problem(rng, 2, 2, 1.0);
  const SolvedPlan plan = solve_problem(pr, config(1.0));
  const Vec x = random_state(rng, 2);
  const Vec m0 = pr.prior.u_bar[0] + pr.prior.v_bar[0] * x;
  auto integrand = [&](const Vec& u) { return g_value(plan, 0, x, u) + normal_log_density(u, m0, pr.prior.sigma_p); };
  // Riemann sum on a box around the numerically located mode.
  const Vec mode = quadratic_argmax(polarize(integrand, 2, 1.0));
  const double h = 0.01;
  const int half = 800;
  const double peak = integrand(mode);
  double acc = 0.0;
  for (int i = -half; i <= half; ++i)
    for (int j = -half; j <= half; ++j) {
      Vec u(2);
      u << mode[0] + h * i, mode[1] + h * j;
      acc += std::exp(integrand(u) - peak);
    }
  EXPECT_NEAR(plan.f_soft[0](x), peak + std::log(acc * h * h), 1e-8);
}

TEST(FreeEnergy, ZeroTemperatureTerminalValueIsMaxReward) {
  std::mt19937_64 rng(35);
  const Problem pr = random_problem(rng, 3, 2, 10.0);
  const SolvedPlan plan = solve_problem(pr, config(1e6));
  const Vec x = random_state(rng, 3);
  const Vec u = terminal_action(plan.reward[1], pr.params, x);
  const double want = reward_value(plan.reward[1], x, u);
  EXPECT_LT(std::abs(free_energy(plan, 1, x) - want) / std::abs(want), 1e-3);
  EXPECT_LT(std::abs(plan.f_soft[1](x) - want) / std::abs(want), 1e-3);
}

TEST(BackwardPass, ContractionSymmetryAndIterations) {
  std::mt19937_64 rng(36);
  for (int k = 0; k < 10; ++k) {
    const Problem pr = random_problem(rng, 3, 4, 10.0);
    const SolvedPlan plan = solve_problem(pr, config(uniform(rng, 1.0, 2000.0)));
    for (int t = 0; t < 4; ++t) {
      EXPECT_LT(contraction_radius(plan, t), 1.0);
      EXPECT_GT(contraction_radius(plan, t), 0.0);
      EXPECT_LE((plan.q[t].q_xx - plan.q[t].q_xx.transpose()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LE((plan.q[t].q_uu - plan.q[t].q_uu.transpose()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LE((plan.f[t].f_xx - plan.f[t].f_xx.transpose()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LE((plan.policy[t].sigma_tilde - plan.policy[t].sigma_tilde.transpose()).cwiseAbs().maxCoeff(),
                1e-12);
      EXPECT_LE(plan.inner_iterations[t], 2);
    }
  }
}

TEST(BackwardPass, Errors) {
  std::mt19937_64 rng(37);
  const Problem pr = random_problem(rng, 3, 3, 10.0);
  SolverConfig cfg = config(1000.0);
  cfg.gamma = 0.0;
  EXPECT_THROW(solve_problem(pr, cfg), ParameterError);
  cfg = config(-1.0);
  EXPECT_THROW(solve_problem(pr, cfg), ParameterError);
  cfg = config(1000.0);
  cfg.max_inner_iters = 1;
  EXPECT_THROW(solve_problem(pr, cfg), ConvergenceError);

  // A strongly convex next-step value makes Q_uu indefinite.
  std::vector<RewardCoeffs> rc;
  for (int t = 0; t < 3; ++t) rc.push_back(build_coeffs(pr.params, pr.rbar[t], pr.cov, pr.bench.b[t]));
  rc[1].r_xx += 1e3 * Mat::Identity(3, 3);
  rc[2].r_xx += 1e3 * Mat::Identity(3, 3);
  try {
    backward_pass(rc, pr.params, pr.prior, config(1000.0), pr.rbar, pr.cov);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_GE(e.step(), 0);
    EXPECT_NE(std::string(e.what()).find("t="), std::string::npos);
  }
}

TEST(Sampling, DegenerateCovarianceReturnsMean) {
  std::mt19937_64 rng(38);
  const Problem pr = random_problem(rng, 3, 2, 10.0);
  SolvedPlan plan = solve_problem(pr, config(100.0));
  plan.policy[0].sigma_tilde = 1e-20 * Mat::Identity(3, 3);
  plan.policy[0].refactor();
  const Vec x = random_state(rng, 3);
  EXPECT_LT((sample_action(plan, 0, x, rng) - plan.policy[0].mean(x)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Sampling, MomentsMatchPosterior) {
  std::mt19937_64 rng(39);
  const Problem pr = random_problem(rng, 3, 2, 10.0);
  const SolvedPlan plan = solve_problem(pr, config(0.5));
  const Vec x = random_state(rng, 3);
  const int draws = 100000;
  Vec sum = Vec::Zero(3);
  Mat outer = Mat::Zero(3, 3);
  std::vector<Vec> samples;
  samples.reserve(draws);
  for (int k = 0; k < draws; ++k) {
    samples.push_back(sample_action(plan, 0, x, rng));
    sum += samples.back();
  }
  const Vec mean = sum / draws;
  for (const Vec& s : samples) outer += (s - mean) * (s - mean).transpose();
  const Mat cov = outer / (draws - 1);
  const Mat& want = plan.policy[0].sigma_tilde;
  const Vec target = plan.policy[0].mean(x);
  for (int i = 0; i < 3; ++i) EXPECT_LT(std::abs(mean[i] - target[i]), 4.0 * std::sqrt(want(i, i) / draws));
  EXPECT_LT((cov - want).norm() / want.norm(), 0.05);
}

namespace {

ReturnPaths flat_paths(int n_paths, int horizon, int n_risky, double bond) {
  ReturnPaths p;
  p.n_paths = n_paths;
  p.horizon = horizon;
  p.n_risky = n_risky;
  p.bond_return = bond;
  p.expected.assign(n_paths, Mat::Zero(horizon, n_risky));
  p.realized.assign(n_paths, Mat::Zero(horizon, n_risky));
  p.market = Mat::Zero(n_paths, horizon);
  return p;
}

SolvedPlan zero_policy_plan(int n, int horizon) {
  std::mt19937_64 rng(40);
  const Problem pr = random_problem(rng, n, horizon, 10.0);
  SolvedPlan plan = solve_problem(pr, config(100.0));
  for (auto& step : plan.policy) {
    step.u_tilde.setZero();
    step.v_tilde.setZero();
    step.sigma_tilde = 1e-20 * Mat::Identity(n, n);
    step.refactor();
  }
  return plan;
}

}  // namespace

TEST(Rollout, ZeroPolicyZeroReturnsHoldsStill) {
  const SolvedPlan plan = zero_policy_plan(3, 4);
  const ReturnPaths paths = flat_paths(3, 4, 2, 0.0);
  const Vec x0 = equal_weight_state(3, 1000.0);
  const auto trajs = rollout(plan, paths, x0, 5);
  for (const Trajectory& tr : trajs) {
    for (int t = 0; t <= 4; ++t) EXPECT_LT((tr.x.row(t).transpose() - x0).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LT(tr.cash.cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(Rollout, BondOnlyCompounds) {
  const SolvedPlan plan = zero_policy_plan(3, 4);
  const double bond = 0.02 * 0.25;
  const ReturnPaths paths = flat_paths(2, 4, 2, bond);
  Vec x0 = Vec::Zero(3);
  x0[0] = 1000.0;
  const auto trajs = rollout(plan, paths, x0, 5);
  for (int t = 0; t <= 4; ++t) EXPECT_NEAR(trajs[0].x.row(t).sum(), 1000.0 * std::pow(1.0 + bond, t), 1e-7);
}

TEST(Rollout, StateEquationAndCashIdentity) {
  std::mt19937_64 rng(41);
  const Problem pr = random_problem(rng, 4, 5, 10.0);
  const SolvedPlan plan = solve_problem(pr, config(50.0));
  MarketSpec spec;
  spec.n_risky = 3;
  spec.n_paths = 6;
  spec.horizon = 5;
  const ReturnPaths paths = simulate(spec);
  const auto trajs = rollout(plan, paths, equal_weight_state(4, 1000.0), 9);
  ASSERT_EQ(trajs.size(), 6u);
  for (int p = 0; p < 6; ++p) {
    const Trajectory& tr = trajs[p];
    for (int t = 0; t < 5; ++t) {
      double c = 0.0;
      for (int i = 0; i < 4; ++i) c += tr.u(t, i);
      EXPECT_EQ(tr.cash[t], c);
      const Vec r = paths.realized_full(p, t);
      const Vec want = (Vec::Ones(4) + r).cwiseProduct(tr.x.row(t).transpose() + tr.u.row(t).transpose());
      EXPECT_LT((tr.x.row(t + 1).transpose() - want).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
  const auto again = rollout(plan, paths, equal_weight_state(4, 1000.0), 9);
  EXPECT_TRUE((again[3].u.array() == trajs[3].u.array()).all());
}

TEST(Rollout, ShapeMismatch) {
  const SolvedPlan plan = zero_policy_plan(3, 4);
  EXPECT_THROW(rollout(plan, flat_paths(2, 5, 2, 0.0), equal_weight_state(3, 1.0), 1), ShapeError);
  EXPECT_THROW(rollout(plan, flat_paths(2, 4, 3, 0.0), equal_weight_state(3, 1.0), 1), ShapeError);
}

TEST(Solver, FullScaleSolvesQuickly) {
  MarketSpec spec;
  spec.n_paths = 200;
  const ReturnPaths paths = simulate(spec);
  const ReturnCovariance cov = residual_covariance(paths);
  const auto rbar = expected_return_path(paths);
  const RewardParams p = RewardParams::with_scalar_omega(0.001, 1.01, 0.4, 0.15, 100);
  const auto start = std::chrono::steady_clock::now();
  const SolvedPlan plan = solve(p, rbar, cov, BenchmarkPath::compounded(1000.0, 0.5, 0.25, 30),
                                GaussianPrior::isotropic(100, 30, 10.0), SolverConfig{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 10.0);
  for (int t = 0; t < 30; ++t) EXPECT_LT(contraction_radius(plan, t), 1.0);
}
