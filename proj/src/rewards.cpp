#include "glearn/rewards.hpp"

#include "glearn/error.hpp"

#include <cmath>
#include <string>

namespace glearn {

RewardParams RewardParams::with_scalar_omega(double lam, double eta, double rho, double omega, int n) {
  RewardParams p;
  p.lam = lam;
  p.eta = eta;
  p.rho = rho;
  p.omega = omega * Mat::Identity(n, n);
  return p;
}

void RewardParams::validate(int n) const {
  if (!(lam > 0.0) || !std::isfinite(lam)) throw ParameterError("reward: lambda must be > 0");
  if (!std::isfinite(eta)) throw ParameterError("reward: eta must be finite");
  if (!(rho >= 0.0 && rho <= 1.0)) throw ParameterError("reward: rho must lie in [0,1]");
  if (omega.rows() != n || omega.cols() != n)
    throw ShapeError("reward: omega must be " + std::to_string(n) + "x" + std::to_string(n));
  if ((omega - omega.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + omega.cwiseAbs().maxCoeff()))
    throw ParameterError("reward: omega must be symmetric");
  const double tol = 1e-12 * (1.0 + omega.cwiseAbs().maxCoeff());
  if (omega.isDiagonal()) {
    if (omega.diagonal().minCoeff() < -tol) throw ParameterError("reward: omega must be positive semidefinite");
    return;
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(omega, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -tol)
    throw ParameterError("reward: omega must be positive semidefinite");
}

BenchmarkPath BenchmarkPath::compounded(double v0, double rate, double dt, int horizon) {
  BenchmarkPath path;
  path.b.resize(horizon);
  for (int t = 0; t < horizon; ++t) path.b[t] = v0 * std::exp(rate * t * dt);
  return path;
}

void BenchmarkPath::validate() const {
  for (Eigen::Index t = 0; t < b.size(); ++t)
    if (!(b[t] > 0.0) || !std::isfinite(b[t])) throw ParameterError("benchmark entries must be > 0");
}

Mat pad_covariance(const Mat& sigma_r) {
  const Eigen::Index n = sigma_r.rows() + 1;
  Mat out = Mat::Zero(n, n);
  out.bottomRightCorner(n - 1, n - 1) = sigma_r;
  return out;
}

double target_portfolio(const RewardParams& params, double b_t, const Vec& x) {
  return (1.0 - params.rho) * b_t + params.rho * params.eta * x.sum();
}

RewardCoeffs build_coeffs(const RewardParams& params, const Vec& rbar, const ReturnCovariance& sigma_r,
                          double b_t) {
  const Eigen::Index n = rbar.size();
  if (sigma_r.sigma_r.rows() != n - 1 || sigma_r.sigma_r.cols() != n - 1)
    throw ShapeError("build_coeffs: sigma_r must be (N-1)x(N-1) for N = " + std::to_string(n));
  params.validate(static_cast<int>(n));

  const double lam = params.lam;
  const double er = params.eta * params.rho;
  const double bench = (1.0 - params.rho) * b_t;
  const Vec gross = Vec::Ones(n) + rbar;
  const Vec ones = Vec::Ones(n);

  RewardCoeffs c;
  c.sigma_hat = symmetrized(pad_covariance(sigma_r.sigma_r) + gross * gross.transpose());
  const Mat cross = (2.0 * lam * er) * gross * ones.transpose();
  c.r_xx = symmetrized(-lam * er * er * ones * ones.transpose() + cross - lam * c.sigma_hat);
  c.r_ux = cross - 2.0 * lam * c.sigma_hat;
  c.r_uu = symmetrized(-lam * c.sigma_hat - params.omega);
  c.r_x = -2.0 * lam * er * bench * ones + 2.0 * lam * bench * gross;
  c.r_u = -ones + 2.0 * lam * bench * gross;
  c.r_0 = -lam * bench * bench;
  return c;
}

double reward_value(const RewardCoeffs& c, const Vec& x, const Vec& u) {
  const Eigen::Index n = c.r_x.size();
  if (x.size() != n || u.size() != n) throw ShapeError("reward_value: state/action size mismatch");
  return x.dot(c.r_xx * x) + u.dot(c.r_ux * x) + u.dot(c.r_uu * u) + x.dot(c.r_x) + u.dot(c.r_u) + c.r_0;
}

}  // namespace glearn
