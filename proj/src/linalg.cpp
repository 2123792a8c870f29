#include "glearn/linalg.hpp"

#include "glearn/error.hpp"

#include <cmath>
#include <numbers>

namespace glearn {

SpdFactor::SpdFactor(const Mat& a, const std::string& what) : llt_(a) {
  if (a.rows() != a.cols()) throw ShapeError(what + " is not square");
  if (llt_.info() != Eigen::Success) throw NumericalError(what + " is not positive definite");
  const auto diag = llt_.matrixLLT().diagonal();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (!(diag[i] > 0.0) || !std::isfinite(diag[i]))
      throw NumericalError(what + " is not positive definite");
    acc += std::log(diag[i]);
  }
  log_det_ = 2.0 * acc;
}

Mat SpdFactor::inverse() const {
  return llt_.solve(Mat::Identity(llt_.rows(), llt_.cols()));
}

bool is_spd(const Mat& a) {
  if (a.rows() != a.cols()) return false;
  Eigen::LLT<Mat> llt(a);
  if (llt.info() != Eigen::Success) return false;
  return (llt.matrixLLT().diagonal().array() > 0.0).all();
}

double log_det_identity_plus(const Mat& e) {
  const double norm = e.norm();
  if (norm < 1e-4) {
    // Series log|I+E| = tr E - tr E^2/2 + tr E^3/3 - ...; truncation error ~ norm^5.
    const Mat e2 = e * e;
    return e.trace() - 0.5 * e2.trace() + (e2 * e).trace() / 3.0 - (e2 * e2).trace() / 4.0;
  }
  const Mat k = Mat::Identity(e.rows(), e.cols()) + e;
  return SpdFactor(k, "I + E").log_det();
}

double gaussian_log_density(const Vec& x, const Vec& mean, const SpdFactor& cov) {
  const Vec d = x - mean;
  const Vec z = cov.llt().matrixL().solve(d);
  const double n = static_cast<double>(x.size());
  return -0.5 * (n * std::log(2.0 * std::numbers::pi) + cov.log_det() + z.squaredNorm());
}

}  // namespace glearn
