#pragma once

#include "glearn/linalg.hpp"
#include "glearn/market.hpp"

#include <vector>

namespace glearn {

// Economic parameters of the one-step reward.
struct RewardParams {
  double lam = 0.001;  // target-shortfall weight
  double eta = 1.01;   // desired growth of the current portfolio
  double rho = 0.4;    // benchmark vs. portfolio mixture in the target
  Mat omega;           // quadratic transaction-cost matrix, N x N

  static RewardParams with_scalar_omega(double lam, double eta, double rho, double omega, int n);
  void validate(int n) const;
};

// B_t for t = 0..T-1, in dollars.
struct BenchmarkPath {
  Vec b;

  // B_t = v0 * exp(rate * t * dt), continuously compounded.
  static BenchmarkPath compounded(double v0, double rate, double dt, int horizon);
  void validate() const;
};

// Quadratic-form coefficients of the expected one-step reward
//   x'Rxx x + u'Rux x + u'Ruu u + x'Rx + u'Ru + R0.
// r_ux is row-convention: the cross term is u' * r_ux * x.
struct RewardCoeffs {
  Mat r_xx;
  Mat r_ux;
  Mat r_uu;
  Vec r_x;
  Vec r_u;
  double r_0 = 0.0;
  Mat sigma_hat;
};

// Embeds the (N-1)x(N-1) risky covariance into an N x N matrix with a zero bond row/column.
Mat pad_covariance(const Mat& sigma_r);

// Target wealth for the next period: (1-rho) B_t + rho * eta * 1'x_t.
double target_portfolio(const RewardParams& params, double b_t, const Vec& x);

// rbar is the N-vector of expected one-period (net) returns, bond first.
RewardCoeffs build_coeffs(const RewardParams& params, const Vec& rbar, const ReturnCovariance& sigma_r,
                          double b_t);

double reward_value(const RewardCoeffs& coeffs, const Vec& x, const Vec& u);

}  // namespace glearn
