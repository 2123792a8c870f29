#include "glearn/girl.hpp"

#include "glearn/error.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace glearn {

namespace {

std::string describe(const RewardTheta& th) {
  std::ostringstream os;
  os.precision(10);
  os << "(lam=" << th.lam << ", eta=" << th.eta << ", rho=" << th.rho << ", omega=" << th.omega << ")";
  return os.str();
}

double logistic(double c) { return 1.0 / (1.0 + std::exp(-c)); }

// Transition term for one step, given a factor of the full risky covariance.
double transition_term(const Vec& x_next, const Vec& x, const Vec& u, const Vec& rbar, const Mat& sigma_r,
                       const SpdFactor& full) {
  const Eigen::Index nr = sigma_r.rows();
  const Vec pos = (x + u).tail(nr);
  std::vector<Eigen::Index> keep;
  keep.reserve(nr);
  for (Eigen::Index i = 0; i < nr; ++i)
    if (std::abs(pos[i]) >= kMinPosition) keep.push_back(i);
  if (keep.empty()) throw DegenerateTransitionError("transition: every risky position is below the threshold");

  Vec delta(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const Eigen::Index i = keep[k];
    delta[k] = x_next[i + 1] / pos[i] - (1.0 + rbar[i + 1]);
  }
  if (static_cast<Eigen::Index>(keep.size()) == nr) {
    const Vec z = full.llt().matrixL().solve(delta);
    return -0.5 * full.log_det() - 0.5 * z.squaredNorm();
  }
  Mat sub(delta.size(), delta.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) sub(a, b) = sigma_r(keep[a], keep[b]);
  const SpdFactor part(sub, "sigma_r sub-block");
  const Vec z = part.llt().matrixL().solve(delta);
  return -0.5 * part.log_det() - 0.5 * z.squaredNorm();
}

}  // namespace

RewardParams GirlParams::reward_params() const {
  return RewardParams::with_scalar_omega(reward.lam, reward.eta, reward.rho, reward.omega, fixed.n());
}

void require_feasible(const RewardTheta& th) {
  if (!(th.lam > 0.0 && th.eta > 0.0 && th.omega > 0.0 && th.rho > 0.0 && th.rho < 1.0))
    throw ParameterError("theta outside the feasible region " + describe(th));
}

Coords to_unconstrained(const RewardTheta& th) {
  require_feasible(th);
  return {std::log(th.lam), std::log(th.eta), std::log(th.rho) - std::log1p(-th.rho), std::log(th.omega)};
}

RewardTheta from_unconstrained(const Coords& z) {
  return {std::exp(z[0]), std::exp(z[1]), logistic(z[2]), std::exp(z[3])};
}

void FitConfig::validate() const {
  if (!(learning_rate > 0.0 && stop_tol > 0.0 && fd_step > 0.0 && adam_epsilon > 0.0))
    throw ParameterError("fit: rates and tolerances must be positive");
  if (max_iters < 1 || divergence_window < 1) throw ParameterError("fit: iteration limits must be positive");
  if (!(adam_beta1 > 0.0 && adam_beta1 < 1.0 && adam_beta2 > 0.0 && adam_beta2 < 1.0))
    throw ParameterError("fit: adam betas must lie in (0,1)");
}

double transition_log_prob(const Vec& x_next, const Vec& x, const Vec& u, const Vec& rbar,
                           const ReturnCovariance& sigma_r) {
  const Eigen::Index n = sigma_r.sigma_r.rows() + 1;
  if (x_next.size() != n || x.size() != n || u.size() != n || rbar.size() != n)
    throw ShapeError("transition_log_prob: size mismatch");
  const SpdFactor full(sigma_r.sigma_r, "sigma_r");
  return transition_term(x_next, x, u, rbar, sigma_r.sigma_r, full);
}

double action_log_prob(const SolvedPlan& plan, int t, const Vec& x, const Vec& u, double beta) {
  const GaussianPrior& prior = plan.prior;
  const SpdFactor prior_cov(prior.sigma_p, "prior covariance");
  const Vec prior_mean = prior.u_bar[t] + prior.v_bar[t] * x;
  const double log_prior = gaussian_log_density(u, prior_mean, prior_cov);
  return log_prior + beta * (g_value(plan, t, x, u) - plan.f_soft[t](x));
}

double posterior_log_prob(const SolvedPlan& plan, int t, const Vec& x, const Vec& u) {
  const PolicyStep& step = plan.policy[t];
  return gaussian_log_density(u, step.mean(x), step.covariance);
}

GirlObjective::GirlObjective(GirlFixed fixed, const std::vector<Trajectory>& trajs)
    : fixed_(std::move(fixed)), n_traj_(static_cast<int>(trajs.size())) {
  const int horizon = fixed_.horizon();
  const int n = fixed_.n();
  if (fixed_.benchmark.b.size() != horizon) throw ShapeError("girl: benchmark horizon mismatch");
  fixed_.prior.validate(n, horizon);
  fixed_.solver.validate();

  states_.assign(horizon, Mat(n_traj_, n));
  actions_.assign(horizon, Mat(n_traj_, n));
  const SpdFactor full(fixed_.sigma_r.sigma_r, "sigma_r");
  double trans = 0.0;
  for (int p = 0; p < n_traj_; ++p) {
    const Trajectory& tr = trajs[p];
    if (tr.horizon() != horizon || tr.x.rows() != horizon + 1 || tr.x.cols() != n || tr.u.cols() != n)
      throw ShapeError("girl: trajectory " + std::to_string(p) + " does not match the horizon/asset count");
    for (int t = 0; t < horizon; ++t) {
      states_[t].row(p) = tr.x.row(t);
      actions_[t].row(p) = tr.u.row(t);
      trans += transition_term(tr.x.row(t + 1).transpose(), tr.x.row(t).transpose(), tr.u.row(t).transpose(),
                               fixed_.rbar[t], fixed_.sigma_r.sigma_r, full);
    }
  }
  transition_nll_ = -trans;
}

SolvedPlan GirlObjective::solve(const RewardTheta& theta) const {
  require_feasible(theta);
  const RewardParams params =
      RewardParams::with_scalar_omega(theta.lam, theta.eta, theta.rho, theta.omega, fixed_.n());
  try {
    return glearn::solve(params, fixed_.rbar, fixed_.sigma_r, fixed_.benchmark, fixed_.prior, fixed_.solver);
  } catch (const InfeasibleError& e) {
    throw InfeasibleError(std::string(e.what()) + " under theta " + describe(theta), e.step());
  }
}

// Sum over steps of the posterior-Gaussian log-density, evaluated a whole
// step at a time: row p of D is u_p - u_tilde - v_tilde x_p, and with the
// precision P = L L' each quadratic form is the squared norm of row p of D L.
double GirlObjective::action_nll(const SolvedPlan& plan) const {
  if (n_traj_ == 0) return 0.0;
  const double n = static_cast<double>(fixed_.n());
  const double log_2pi = std::log(2.0 * std::numbers::pi);
  double ll = 0.0;
  for (int t = 0; t < plan.horizon; ++t) {
    const PolicyStep& step = plan.policy[t];
    Mat d = actions_[t];
    d.noalias() -= states_[t] * step.v_tilde.transpose();
    d.rowwise() -= step.u_tilde.transpose();
    const Mat e = d * step.precision.llt().matrixL();
    ll += n_traj_ * 0.5 * (step.precision.log_det() - n * log_2pi) - 0.5 * e.squaredNorm();
  }
  return -ll;
}

double GirlObjective::nll(const RewardTheta& theta) const {
  if (n_traj_ == 0) return 0.0;
  return action_nll(solve(theta)) + transition_nll_;
}

double trajectory_nll(const GirlParams& theta, const std::vector<Trajectory>& trajs) {
  if (trajs.empty()) return 0.0;
  return GirlObjective(theta.fixed, trajs).nll(theta.reward);
}

// Probe points are evaluated on up to hardware_concurrency threads. Each
// evaluation is independent and deterministic, so the result does not depend
// on the thread count.
Coords nll_gradient(const GirlObjective& objective, const Coords& z, double fd_step, FdScheme scheme) {
  const double center = scheme == FdScheme::central ? 0.0 : objective.nll(z);
  if (!std::isfinite(center)) throw GradientError("non-finite NLL at the base point", -1);

  Coords h;
  std::vector<Coords> probes;
  std::vector<int> probe_coord;
  for (int i = 0; i < 4; ++i) {
    h[i] = fd_step * std::max(std::abs(z[i]), 1.0);
    for (double sign : {1.0, -1.0}) {
      if ((sign > 0 && scheme == FdScheme::backward) || (sign < 0 && scheme == FdScheme::forward)) continue;
      Coords p = z;
      p[i] += sign * h[i];
      probes.push_back(p);
      probe_coord.push_back(i);
    }
  }

  const int n_probes = static_cast<int>(probes.size());
  std::vector<double> value(n_probes);
  std::vector<std::exception_ptr> failure(n_probes);
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, n_probes);
  auto work = [&](int w) {
    for (int k = w; k < n_probes; k += workers) {
      try {
        value[k] = objective.nll(probes[k]);
      } catch (...) {
        failure[k] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (int k = 0; k < n_probes; ++k) {
    if (failure[k]) std::rethrow_exception(failure[k]);
    if (!std::isfinite(value[k]))
      throw GradientError(std::string("non-finite NLL probing ") + coordinate_name(probe_coord[k]), probe_coord[k]);
  }

  Coords g;
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    const double up = scheme == FdScheme::backward ? center : value[k++];
    const double down = scheme == FdScheme::forward ? center : value[k++];
    g[i] = (up - down) / (scheme == FdScheme::central ? 2.0 * h[i] : h[i]);
  }
  return g;
}

FitReport fit(const GirlObjective& objective, const FitConfig& cfg, const RewardTheta& theta0,
              const FitObserver& observe) {
  cfg.validate();
  if (objective.n_trajectories() == 0) throw ParameterError("fit: no trajectories");

  Coords z = to_unconstrained(theta0);
  Coords m = Coords::Zero();
  Coords v = Coords::Zero();
  Coords best_z = z;
  double best = std::numeric_limits<double>::infinity();
  double prev = std::numeric_limits<double>::infinity();
  int rising = 0;

  FitReport report;
  for (int k = 1; k <= cfg.max_iters; ++k) {
    const double loss = objective.nll(z);
    if (!std::isfinite(loss)) throw GradientError("non-finite NLL at iterate " + std::to_string(k), -1);
    report.loss_path.push_back(loss);
    report.iterations = k;
    if (observe) observe(k, loss, from_unconstrained(z));
    if (loss < best) {
      best = loss;
      best_z = z;
    }
    rising = loss > prev ? rising + 1 : 0;
    prev = loss;
    if (rising >= cfg.divergence_window)
      throw DivergenceError("fit diverged: NLL increased for " + std::to_string(rising) +
                                " consecutive iterations",
                            report.loss_path);

    const Coords g = nll_gradient(objective, z, cfg.fd_step);
    m = cfg.adam_beta1 * m + (1.0 - cfg.adam_beta1) * g;
    v = cfg.adam_beta2 * v + (1.0 - cfg.adam_beta2) * g.cwiseAbs2();
    const Coords m_hat = m / (1.0 - std::pow(cfg.adam_beta1, k));
    const Coords v_hat = v / (1.0 - std::pow(cfg.adam_beta2, k));
    const Coords step = cfg.learning_rate * m_hat.array() / (v_hat.array().sqrt() + cfg.adam_epsilon);
    z -= step;
    if (step.norm() < cfg.stop_tol) {
      report.converged = true;
      break;
    }
  }
  // The last step may have landed on a better point than any evaluated iterate.
  const double last = objective.nll(z);
  if (last < best) {
    best = last;
    best_z = z;
  }
  report.params = from_unconstrained(best_z);
  report.final_loss = best;
  return report;
}

std::array<LossSlice, 4> loss_slices(const GirlObjective& objective, const RewardTheta& center, int half_points,
                                     double rel_halfwidth) {
  std::array<LossSlice, 4> out;
  for (int c = 0; c < 4; ++c) {
    LossSlice& s = out[c];
    s.coordinate = c;
    for (int k = -half_points; k <= half_points; ++k) {
      RewardTheta th = center;
      const double scale = 1.0 + rel_halfwidth * k / half_points;
      double* coord = c == 0 ? &th.lam : c == 1 ? &th.eta : c == 2 ? &th.rho : &th.omega;
      *coord *= scale;
      s.grid.push_back(*coord);
      s.loss.push_back(objective.nll(th));
    }
  }
  return out;
}

const char* coordinate_name(int coordinate) {
  switch (coordinate) {
    case 0: return "lambda";
    case 1: return "eta";
    case 2: return "rho";
    case 3: return "omega";
    default: return "?";
  }
}

}  // namespace glearn
