#include "glearn/glearner.hpp"

#include "glearn/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace glearn {

namespace {

constexpr std::uint64_t kRolloutStream = 0x726f6c6c;  // "roll"

std::string at_step(int t) { return " at t=" + std::to_string(t); }

// Prior quantities reused at every step.
struct PriorCache {
  Mat sigma_p_inv;
  Mat sigma_p_lower;
  double log_det_sigma_p = 0.0;
  double trace_sigma_p = 0.0;
};

PriorCache cache_prior(const GaussianPrior& prior) {
  SpdFactor f(prior.sigma_p, "prior covariance");
  return {f.inverse(), f.lower(), f.log_det(), prior.sigma_p.trace()};
}

// Posterior of pi0(u|x) exp(beta G(x,u)); fills the auxiliary fields of q.
PolicyStep bayesian_update(QCoeffs& q, const GaussianPrior& prior, const PriorCache& pc, double beta, int t) {
  q.u_aux = beta * q.q_ux + pc.sigma_p_inv * prior.v_bar[t];
  q.w_aux = beta * q.q_u + pc.sigma_p_inv * prior.u_bar[t];
  q.sigma_bar = symmetrized(pc.sigma_p_inv - 2.0 * beta * q.q_uu);

  PolicyStep step;
  try {
    step.precision = SpdFactor(q.sigma_bar, "sigma_bar");
  } catch (const NumericalError&) {
    throw InfeasibleError("sigma_p^{-1} - 2 beta Q_uu is not positive definite" + at_step(t), t);
  }
  step.u_tilde = step.precision.solve(q.w_aux);
  step.v_tilde = step.precision.solve(q.u_aux);
  step.sigma_tilde = symmetrized(step.precision.inverse());
  step.covariance = SpdFactor(step.sigma_tilde, "posterior covariance" + at_step(t));
  return step;
}

double relative_change(const PolicyStep& next, const Vec& u_prev, const Mat& v_prev) {
  const double du = (next.u_tilde - u_prev).norm() / std::max(next.u_tilde.norm(), 1e-300);
  const double dv = (next.v_tilde - v_prev).norm() / std::max(next.v_tilde.norm(), 1e-300);
  return std::max(du, dv);
}

// Soft free energy (1/beta) log int pi0(u|x) exp(beta G(x,u)) du in closed form.
FCoeffs gaussian_free_energy(const QCoeffs& q, const PolicyStep& post, const GaussianPrior& prior,
                             const PriorCache& pc, double beta, int t) {
  const Mat& vb = prior.v_bar[t];
  const Vec& ub = prior.u_bar[t];
  FCoeffs f;
  f.f_xx = symmetrized(q.q_xx + (0.5 / beta) * (q.u_aux.transpose() * post.v_tilde -
                                                 vb.transpose() * pc.sigma_p_inv * vb));
  f.f_x = q.q_x + (1.0 / beta) * (q.u_aux.transpose() * post.u_tilde - vb.transpose() * (pc.sigma_p_inv * ub));

  // log|sigma_p| + log|sigma_bar| = log|I + 2 beta L' (-Q_uu) L| with sigma_p = L L'.
  double log_det_sum;
  const double bound = 2.0 * beta * pc.trace_sigma_p * q.q_uu.norm();
  if (bound < 1e-4) {
    const Mat e = (2.0 * beta) * (pc.sigma_p_lower.transpose() * (-q.q_uu) * pc.sigma_p_lower);
    log_det_sum = log_det_identity_plus(symmetrized(e));
  } else {
    log_det_sum = pc.log_det_sigma_p + post.precision.log_det();
  }
  f.f_0 = q.q_0 + (0.5 / beta) * (q.w_aux.dot(post.u_tilde) - ub.dot(pc.sigma_p_inv * ub)) -
          (0.5 / beta) * log_det_sum;
  return f;
}

QCoeffs q_from_reward(const RewardCoeffs& r) {
  QCoeffs q;
  q.q_xx = r.r_xx;
  q.q_ux = r.r_ux;
  q.q_uu = r.r_uu;
  q.q_x = r.r_x;
  q.q_u = r.r_u;
  q.q_0 = r.r_0;
  return q;
}

// G-function coefficients: reward plus discounted expectation of the next F.
// With A = diag(a), E[x'Fx] over x' = A z + z o eps equals z'(Sigma_hat o F) z,
// because Sigma_hat = a a' + padded Sigma_r.
QCoeffs q_from_next(const RewardCoeffs& r, const FCoeffs& next, const Vec& a, const RewardParams& params,
                    const SolverConfig& cfg) {
  const Mat m = symmetrized(r.sigma_hat.cwiseProduct(next.f_xx));
  const Vec af = a.cwiseProduct(next.f_x);
  const double g = cfg.gamma;
  QCoeffs q;
  q.q_xx = symmetrized(r.r_xx + g * m);
  q.q_ux = r.r_ux + 2.0 * g * m;
  q.q_uu = symmetrized(r.r_uu + g * m);
  if (cfg.omega_mode == OmegaMode::strict_paper) q.q_uu -= params.omega;
  q.q_x = r.r_x + g * af;
  q.q_u = r.r_u + g * af;
  q.q_0 = r.r_0 + g * next.f_0;
  return q;
}

// max_u R(x,u) as a quadratic in x: with K = (-R_uu)^{-1} R_ux / 2 and
// k = (-R_uu)^{-1} R_u / 2 the maximizer is u* = K x + k.
FCoeffs terminal_value(const RewardCoeffs& r, int t) {
  SpdFactor neg_ruu;
  try {
    neg_ruu = SpdFactor(-r.r_uu, "-R_uu");
  } catch (const NumericalError&) {
    throw InfeasibleError("terminal reward is not strictly concave in u" + at_step(t), t);
  }
  const Mat gain = 0.5 * neg_ruu.solve(r.r_ux);
  const Vec offset = 0.5 * neg_ruu.solve(r.r_u);
  FCoeffs f;
  f.f_xx = symmetrized(r.r_xx + r.r_ux.transpose() * gain + gain.transpose() * r.r_uu * gain);
  f.f_x = r.r_x + r.r_ux.transpose() * offset + gain.transpose() * r.r_u +
          2.0 * gain.transpose() * (r.r_uu * offset);
  f.f_0 = r.r_0 + r.r_u.dot(offset) + offset.dot(r.r_uu * offset);
  return f;
}

// One step of the soft recursion: iterate policy update and evaluation until
// the posterior mean parameters stop moving.
PolicyStep solve_step(QCoeffs& q, const GaussianPrior& prior, const PriorCache& pc, const SolverConfig& cfg,
                      int t, int& iterations) {
  // Q_uu < 0 is equivalent to every eigenvalue of sigma_tilde sigma_p^{-1} lying in (0, 1).
  if (!is_spd(-q.q_uu))
    throw InfeasibleError("Q_uu is not negative definite (policy iteration would not contract)" + at_step(t), t);

  Vec u_prev = prior.u_bar[t];
  Mat v_prev = prior.v_bar[t];
  double change = 0.0;
  for (int k = 1; k <= cfg.max_inner_iters; ++k) {
    PolicyStep next = bayesian_update(q, prior, pc, cfg.beta, t);
    change = relative_change(next, u_prev, v_prev);
    if (change < cfg.inner_tol) {
      iterations = k;
      return next;
    }
    u_prev = std::move(next.u_tilde);
    v_prev = std::move(next.v_tilde);
  }
  throw ConvergenceError("policy iteration did not converge" + at_step(t) + ", last relative change " +
                             std::to_string(change),
                         change);
}

}  // namespace

void SolverConfig::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw ParameterError("solver: beta must be > 0");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ParameterError("solver: gamma must lie in (0,1]");
  if (max_inner_iters < 1) throw ParameterError("solver: max_inner_iters must be >= 1");
  if (!(inner_tol > 0.0)) throw ParameterError("solver: inner_tol must be > 0");
}

GaussianPrior GaussianPrior::isotropic(int n, int horizon, double sigma, double u_const) {
  GaussianPrior p;
  p.u_bar.assign(horizon, Vec::Constant(n, u_const));
  p.v_bar.assign(horizon, Mat::Zero(n, n));
  p.sigma_p = sigma * sigma * Mat::Identity(n, n);
  return p;
}

void GaussianPrior::validate(int n, int horizon_) const {
  if (horizon() != horizon_ || static_cast<int>(v_bar.size()) != horizon_)
    throw ShapeError("prior: horizon mismatch");
  if (sigma_p.rows() != n || sigma_p.cols() != n) throw ShapeError("prior: sigma_p shape");
  for (int t = 0; t < horizon_; ++t)
    if (u_bar[t].size() != n || v_bar[t].rows() != n || v_bar[t].cols() != n)
      throw ShapeError("prior: mean parameter shape");
  if (!is_spd(sigma_p)) throw ParameterError("prior: sigma_p must be positive definite");
}

void PolicyStep::refactor() {
  sigma_tilde = symmetrized(sigma_tilde);
  covariance = SpdFactor(sigma_tilde, "posterior covariance");
  precision = SpdFactor(covariance.inverse(), "posterior precision");
}

Vec terminal_action(const RewardCoeffs& coeffs, const RewardParams& params, const Vec& x) {
  const Mat sigma_tilde = coeffs.sigma_hat + params.omega / params.lam;
  Eigen::LDLT<Mat> ldlt(sigma_tilde);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw NumericalError("terminal_action: Sigma_hat + Omega/lambda is singular");
  const Vec rhs = (coeffs.r_u + coeffs.r_ux * x) / (2.0 * params.lam);
  return ldlt.solve(rhs);
}

SolvedPlan backward_pass(const std::vector<RewardCoeffs>& rc, const RewardParams& params,
                         const GaussianPrior& prior, const SolverConfig& cfg, const std::vector<Vec>& rbar,
                         const ReturnCovariance& sigma_r) {
  cfg.validate();
  const int horizon = static_cast<int>(rc.size());
  if (horizon < 1) throw ShapeError("backward_pass: empty horizon");
  if (static_cast<int>(rbar.size()) != horizon) throw ShapeError("backward_pass: rbar horizon mismatch");
  const int n = static_cast<int>(rc.front().r_x.size());
  prior.validate(n, horizon);
  if (sigma_r.sigma_r.rows() != n - 1) throw ShapeError("backward_pass: sigma_r shape");

  SolvedPlan plan;
  plan.horizon = horizon;
  plan.n = n;
  plan.cfg = cfg;
  plan.prior = prior;
  plan.reward = rc;
  plan.sigma_r_padded = pad_covariance(sigma_r.sigma_r);
  plan.growth.resize(horizon);
  for (int t = 0; t < horizon; ++t) {
    if (rbar[t].size() != n) throw ShapeError("backward_pass: rbar size mismatch" + at_step(t));
    plan.growth[t] = Vec::Ones(n) + rbar[t];
  }
  plan.q.resize(horizon);
  plan.f.resize(horizon);
  plan.f_soft.resize(horizon);
  plan.policy.resize(horizon);
  plan.inner_iterations.assign(horizon, 0);

  const PriorCache pc = cache_prior(prior);
  const int last = horizon - 1;

  plan.sigma_tilde_terminal = rc[last].sigma_hat + params.omega / params.lam;
  plan.f[last] = terminal_value(rc[last], last);
  plan.q[last] = q_from_reward(rc[last]);
  plan.policy[last] = solve_step(plan.q[last], prior, pc, cfg, last, plan.inner_iterations[last]);
  plan.f_soft[last] = gaussian_free_energy(plan.q[last], plan.policy[last], prior, pc, cfg.beta, last);

  for (int t = last - 1; t >= 0; --t) {
    plan.q[t] = q_from_next(rc[t], plan.f[t + 1], plan.growth[t], params, cfg);
    plan.policy[t] = solve_step(plan.q[t], prior, pc, cfg, t, plan.inner_iterations[t]);
    plan.f[t] = gaussian_free_energy(plan.q[t], plan.policy[t], prior, pc, cfg.beta, t);
    plan.f_soft[t] = plan.f[t];
  }
  return plan;
}

SolvedPlan solve(const RewardParams& params, const std::vector<Vec>& rbar, const ReturnCovariance& sigma_r,
                 const BenchmarkPath& benchmark, const GaussianPrior& prior, const SolverConfig& cfg) {
  const int horizon = static_cast<int>(rbar.size());
  if (benchmark.b.size() != horizon) throw ShapeError("solve: benchmark horizon mismatch");
  if (horizon < 1) throw ShapeError("solve: empty horizon");
  params.validate(static_cast<int>(rbar.front().size()));
  benchmark.validate();
  std::vector<RewardCoeffs> rc;
  rc.reserve(horizon);
  for (int t = 0; t < horizon; ++t) rc.push_back(build_coeffs(params, rbar[t], sigma_r, benchmark.b[t]));
  return backward_pass(rc, params, prior, cfg, rbar, sigma_r);
}

double free_energy(const SolvedPlan& plan, int t, const Vec& x) {
  if (t < 0 || t >= plan.horizon) throw ShapeError("free_energy: step out of range");
  return plan.f[t](x);
}

double g_value(const SolvedPlan& plan, int t, const Vec& x, const Vec& u) {
  if (t < 0 || t >= plan.horizon) throw ShapeError("g_value: step out of range");
  const QCoeffs& q = plan.q[t];
  return x.dot(q.q_xx * x) + u.dot(q.q_ux * x) + u.dot(q.q_uu * u) + x.dot(q.q_x) + u.dot(q.q_u) + q.q_0;
}

double contraction_radius(const SolvedPlan& plan, int t) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> ges(plan.policy[t].sigma_tilde, plan.prior.sigma_p,
                                                    Eigen::EigenvaluesOnly);
  return ges.eigenvalues().cwiseAbs().maxCoeff();
}

Vec sample_action(const SolvedPlan& plan, int t, const Vec& x, std::mt19937_64& rng) {
  const PolicyStep& step = plan.policy[t];
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec z(plan.n);
  for (int i = 0; i < plan.n; ++i) z[i] = normal(rng);
  return step.mean(x) + step.covariance.llt().matrixL() * z;
}

Trajectory rollout_path(const SolvedPlan& plan, const ReturnPaths& paths, int path, const Vec& x0,
                        std::mt19937_64& rng) {
  const int horizon = plan.horizon;
  const int n = plan.n;
  Trajectory tr;
  tr.x.resize(horizon + 1, n);
  tr.u.resize(horizon, n);
  tr.cash.resize(horizon);
  tr.x.row(0) = x0.transpose();
  for (int t = 0; t < horizon; ++t) {
    const Vec x = tr.x.row(t).transpose();
    const Vec u = sample_action(plan, t, x, rng);
    tr.u.row(t) = u.transpose();
    double c = 0.0;
    for (int i = 0; i < n; ++i) c += u[i];
    tr.cash[t] = c;
    const Vec r = paths.realized_full(path, t);
    tr.x.row(t + 1) = ((Vec::Ones(n) + r).cwiseProduct(x + u)).transpose();
  }
  return tr;
}

std::vector<Trajectory> rollout(const SolvedPlan& plan, const ReturnPaths& paths, const Vec& x0,
                                std::uint64_t seed) {
  paths.validate_shape();
  if (paths.horizon != plan.horizon)
    throw ShapeError("rollout: plan horizon " + std::to_string(plan.horizon) + " != paths horizon " +
                     std::to_string(paths.horizon));
  if (paths.n_assets() != plan.n || x0.size() != plan.n) throw ShapeError("rollout: asset count mismatch");
  std::vector<Trajectory> out;
  out.reserve(paths.n_paths);
  for (int p = 0; p < paths.n_paths; ++p) {
    auto rng = make_engine(seed, kRolloutStream, static_cast<std::uint64_t>(p));
    out.push_back(rollout_path(plan, paths, p, x0, rng));
  }
  return out;
}

Vec equal_weight_state(int n, double wealth) { return Vec::Constant(n, wealth / n); }

}  // namespace glearn
