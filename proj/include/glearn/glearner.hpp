#pragma once

#include "glearn/linalg.hpp"
#include "glearn/market.hpp"
#include "glearn/rewards.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace glearn {

// How the action-action block of the G-function absorbs transaction costs.
//   derived:      Q_uu = R_uu + gamma * M           (R_uu already holds -Omega)
//   strict_paper: Q_uu = R_uu + gamma * M - Omega   (Omega counted twice)
// Only `derived` satisfies the soft Bellman identity; see tests/test_glearner.cpp.
enum class OmegaMode { derived, strict_paper };

struct SolverConfig {
  double beta = 1000.0;  // inverse temperature
  double gamma = 0.95;   // discount
  int max_inner_iters = 100;
  double inner_tol = 1e-9;
  OmegaMode omega_mode = OmegaMode::derived;

  void validate() const;
};

// Reference policy pi0(u|x) = N(u_bar_t + v_bar_t x, sigma_p).
struct GaussianPrior {
  std::vector<Vec> u_bar;
  std::vector<Mat> v_bar;
  Mat sigma_p;

  // Constant mean, no state feedback, covariance sigma^2 I.
  static GaussianPrior isotropic(int n, int horizon, double sigma, double u_const = 0.0);
  int horizon() const { return static_cast<int>(u_bar.size()); }
  int n() const { return static_cast<int>(sigma_p.rows()); }
  void validate(int n, int horizon) const;
};

// Posterior policy for one step: u ~ N(u_tilde + v_tilde x, sigma_tilde).
struct PolicyStep {
  Vec u_tilde;
  Mat v_tilde;
  Mat sigma_tilde;
  SpdFactor precision;   // factor of sigma_tilde^{-1}
  SpdFactor covariance;  // factor of sigma_tilde, used for sampling

  Vec mean(const Vec& x) const { return u_tilde + v_tilde * x; }
  // Recompute both factors after sigma_tilde has been replaced.
  void refactor();
};

struct FCoeffs {
  Mat f_xx;
  Vec f_x;
  double f_0 = 0.0;

  double operator()(const Vec& x) const { return x.dot(f_xx * x) + x.dot(f_x) + f_0; }
};

struct QCoeffs {
  Mat q_xx;
  Mat q_ux;
  Mat q_uu;
  Vec q_x;
  Vec q_u;
  double q_0 = 0.0;
  // Gaussian-integration workspace.
  Mat u_aux;      // beta Q_ux + sigma_p^{-1} v_bar
  Vec w_aux;      // beta Q_u + sigma_p^{-1} u_bar
  Mat sigma_bar;  // sigma_p^{-1} - 2 beta Q_uu
};

struct SolvedPlan {
  int horizon = 0;
  int n = 0;
  SolverConfig cfg;
  GaussianPrior prior;
  std::vector<RewardCoeffs> reward;
  std::vector<Vec> growth;  // diagonal of A_t = diag(1 + rbar_t)
  Mat sigma_r_padded;
  std::vector<QCoeffs> q;
  // Value coefficients driving the recursion. The last step holds the
  // deterministic terminal value max_u R_{T-1}(x, u).
  std::vector<FCoeffs> f;
  // Soft free energy (1/beta) log of the Gaussian partition function at each
  // step. Equal to `f` except at the last step.
  std::vector<FCoeffs> f_soft;
  std::vector<PolicyStep> policy;
  Mat sigma_tilde_terminal;  // Sigma_hat_{T-1} + Omega / lambda
  std::vector<int> inner_iterations;
};

// x(t) for t = 0..T, u(t) and cash(t) for t = 0..T-1.
struct Trajectory {
  Mat x;  // (T+1) x N
  Mat u;  // T x N
  Vec cash;

  int horizon() const { return static_cast<int>(u.rows()); }
};

// argmax_u of the one-step reward at state x.
Vec terminal_action(const RewardCoeffs& coeffs, const RewardParams& params, const Vec& x);

SolvedPlan backward_pass(const std::vector<RewardCoeffs>& rc, const RewardParams& params,
                         const GaussianPrior& prior, const SolverConfig& cfg, const std::vector<Vec>& rbar,
                         const ReturnCovariance& sigma_r);

// Builds the per-step reward coefficients and runs backward_pass.
SolvedPlan solve(const RewardParams& params, const std::vector<Vec>& rbar, const ReturnCovariance& sigma_r,
                 const BenchmarkPath& benchmark, const GaussianPrior& prior, const SolverConfig& cfg);

double free_energy(const SolvedPlan& plan, int t, const Vec& x);
double g_value(const SolvedPlan& plan, int t, const Vec& x, const Vec& u);

// Spectral radius of sigma_tilde * sigma_p^{-1} at step t.
double contraction_radius(const SolvedPlan& plan, int t);

Vec sample_action(const SolvedPlan& plan, int t, const Vec& x, std::mt19937_64& rng);

// One trajectory per path; actions for path p use the engine make_engine(seed, rollout stream, p).
std::vector<Trajectory> rollout(const SolvedPlan& plan, const ReturnPaths& paths, const Vec& x0,
                                std::uint64_t seed);

// Single path with a caller-supplied engine.
Trajectory rollout_path(const SolvedPlan& plan, const ReturnPaths& paths, int path, const Vec& x0,
                        std::mt19937_64& rng);

// Equal dollar split of `wealth` across n assets.
Vec equal_weight_state(int n, double wealth);

}  // namespace glearn
