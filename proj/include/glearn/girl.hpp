#pragma once

#include "glearn/error.hpp"
#include "glearn/glearner.hpp"
#include "glearn/linalg.hpp"
#include "glearn/market.hpp"
#include "glearn/rewards.hpp"

#include <array>
#include <functional>
#include <vector>

namespace glearn {

// The four learned reward coordinates; Omega = omega * I.
struct RewardTheta {
  double lam = 0.001;
  double eta = 1.01;
  double rho = 0.4;
  double omega = 0.15;
};

// Everything held constant while fitting: expected returns, return covariance,
// benchmark, reference policy and solver settings (beta is never learned).
struct GirlFixed {
  std::vector<Vec> rbar;
  ReturnCovariance sigma_r;
  BenchmarkPath benchmark;
  GaussianPrior prior;
  SolverConfig solver;

  int n() const { return static_cast<int>(sigma_r.sigma_r.rows()) + 1; }
  int horizon() const { return static_cast<int>(rbar.size()); }
};

struct GirlParams {
  RewardTheta reward;
  GirlFixed fixed;

  double beta() const { return fixed.solver.beta; }
  RewardParams reward_params() const;
};

using Coords = Eigen::Vector4d;

// lam, eta, omega > 0 and 0 < rho < 1, else ParameterError.
void require_feasible(const RewardTheta& theta);

// (log lam, log eta, logit rho, log omega) and back.
Coords to_unconstrained(const RewardTheta& theta);
RewardTheta from_unconstrained(const Coords& z);

struct FitConfig {
  double learning_rate = 0.1;
  double stop_tol = 1e-8;
  int max_iters = 2000;
  double fd_step = 1e-5;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;
  int divergence_window = 50;

  void validate() const;
};

struct FitReport {
  RewardTheta params;
  std::vector<double> loss_path;
  int iterations = 0;
  bool converged = false;
  double final_loss = 0.0;
};

// Risky positions with |x_i + u_i| below this are left out of a step's transition term.
inline constexpr double kMinPosition = 1e-8;

// log p(x'|x,u) without the bond delta and the 2*pi constant:
//   -1/2 log|Sigma_r| - 1/2 D' Sigma_r^{-1} D,  D = x'_r / (x_r + u_r) - (1 + rbar_r).
double transition_log_prob(const Vec& x_next, const Vec& x, const Vec& u, const Vec& rbar,
                           const ReturnCovariance& sigma_r);

// log pi0(u|x) + beta (G_t(x,u) - F_t(x)), with F the soft free energy.
double action_log_prob(const SolvedPlan& plan, int t, const Vec& x, const Vec& u, double beta);

// Log-density of the posterior Gaussian N(u_tilde + v_tilde x, sigma_tilde) at u.
double posterior_log_prob(const SolvedPlan& plan, int t, const Vec& x, const Vec& u);

// Negative log-likelihood of a fixed trajectory set as a function of theta.
// The transition part does not depend on theta and is computed once.
class GirlObjective {
 public:
  GirlObjective(GirlFixed fixed, const std::vector<Trajectory>& trajs);

  double nll(const RewardTheta& theta) const;
  double nll(const Coords& z) const { return nll(from_unconstrained(z)); }
  double action_nll(const SolvedPlan& plan) const;
  double transition_nll() const { return transition_nll_; }
  SolvedPlan solve(const RewardTheta& theta) const;

  const GirlFixed& fixed() const { return fixed_; }
  int n_trajectories() const { return n_traj_; }

 private:
  GirlFixed fixed_;
  int n_traj_ = 0;
  // Row p of states_[t] / actions_[t] is trajectory p at step t.
  std::vector<Mat> states_;
  std::vector<Mat> actions_;
  double transition_nll_ = 0.0;
};

double trajectory_nll(const GirlParams& theta, const std::vector<Trajectory>& trajs);

enum class FdScheme { central, forward, backward };

// Finite-difference gradient of the NLL in unconstrained coordinates; the step
// for coordinate i is fd_step * max(|z_i|, 1).
Coords nll_gradient(const GirlObjective& objective, const Coords& z, double fd_step,
                    FdScheme scheme = FdScheme::central);

class DivergenceError : public ConvergenceError {
 public:
  DivergenceError(const std::string& what, std::vector<double> loss_path)
      : ConvergenceError(what, loss_path.empty() ? 0.0 : loss_path.back()), loss_path_(std::move(loss_path)) {}
  const std::vector<double>& loss_path() const { return loss_path_; }

 private:
  std::vector<double> loss_path_;
};

// Called once per iteration with (iteration, loss at the iterate, iterate).
using FitObserver = std::function<void(int, double, const RewardTheta&)>;

// Adam in unconstrained coordinates; returns the best theta seen.
FitReport fit(const GirlObjective& objective, const FitConfig& cfg, const RewardTheta& theta0,
              const FitObserver& observe = {});

struct LossSlice {
  int coordinate = 0;  // 0 lam, 1 eta, 2 rho, 3 omega
  std::vector<double> grid;
  std::vector<double> loss;
};

// NLL along each coordinate on center * (1 + rel_halfwidth * k / half_points),
// k = -half_points..half_points, others held at center.
std::array<LossSlice, 4> loss_slices(const GirlObjective& objective, const RewardTheta& center,
                                     int half_points = 10, double rel_halfwidth = 0.2);

const char* coordinate_name(int coordinate);

}  // namespace glearn
