#pragma once

#include <Eigen/Dense>

#include <string>

namespace glearn {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline Mat symmetrized(const Mat& m) { return 0.5 * (m + m.transpose()); }

// Cholesky factorization that raises NumericalError instead of silently
// returning garbage for non-SPD input.
class SpdFactor {
 public:
  SpdFactor() = default;
  explicit SpdFactor(const Mat& a, const std::string& what = "matrix");

  Mat solve(const Mat& b) const { return llt_.solve(b); }
  Vec solve(const Vec& b) const { return llt_.solve(b); }
  Mat inverse() const;
  double log_det() const { return log_det_; }
  // Lower-triangular L with A = L L^T.
  Mat lower() const { return llt_.matrixL(); }
  const Eigen::LLT<Mat>& llt() const { return llt_; }
  Eigen::Index size() const { return llt_.rows(); }

 private:
  Eigen::LLT<Mat> llt_;
  double log_det_ = 0.0;
};

// True when the Cholesky factorization of a succeeds.
bool is_spd(const Mat& a);

// log|I + E| for symmetric positive semidefinite E, accurate when E is tiny.
double log_det_identity_plus(const Mat& e);

// Multivariate normal log-density, including the 2*pi constant.
double gaussian_log_density(const Vec& x, const Vec& mean, const SpdFactor& cov);

}  // namespace glearn
