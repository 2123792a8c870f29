#include "glearn/market.hpp"

#include "glearn/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace glearn {

namespace {

constexpr std::uint64_t kUniverseStream = 0x756e6976;  // "univ"
constexpr std::uint64_t kPathStream = 0x70617468;      // "path"

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterError("market: " + msg);
}

}  // namespace

void MarketSpec::validate() const {
  require(n_risky >= 1, "n_risky must be >= 1");
  require(n_paths >= 1, "n_paths must be >= 1");
  require(horizon >= 1, "horizon must be >= 1");
  require(dt > 0.0 && std::isfinite(dt), "dt must be positive");
  require(sigma_m >= 0.0 && sigma_i >= 0.0, "volatilities must be non-negative");
  require(oracle_c >= 0.0 && oracle_c <= 1.0, "oracle_c must lie in [0,1]");
  require(alpha_range.lo <= alpha_range.hi, "alpha_range is empty");
  require(beta_range.lo <= beta_range.hi, "beta_range is empty");
  require(price_range.lo <= price_range.hi && price_range.lo > 0.0, "price_range invalid");
  require(std::abs(beta_range.lo) < 1.0 && std::abs(beta_range.hi) < 1.0,
          "|beta'| must be < 1 for every asset");
  require(std::isfinite(r_f) && std::isfinite(mu_m), "rates must be finite");
}

Vec ReturnPaths::realized_full(int path, int t) const {
  Vec r(n_assets());
  r[0] = bond_return;
  r.tail(n_risky) = realized[path].row(t).transpose();
  return r;
}

void ReturnPaths::validate_shape() const {
  auto bad = [](const std::string& m) { throw ShapeError("return paths: " + m); };
  if (static_cast<int>(expected.size()) != n_paths || static_cast<int>(realized.size()) != n_paths)
    bad("path count mismatch");
  if (market.rows() != n_paths || market.cols() != horizon) bad("market panel shape");
  for (int p = 0; p < n_paths; ++p) {
    if (expected[p].rows() != horizon || expected[p].cols() != n_risky) bad("expected panel shape");
    if (realized[p].rows() != horizon || realized[p].cols() != n_risky) bad("realized panel shape");
  }
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

ReturnPaths simulate(const MarketSpec& spec) {
  spec.validate();
  const int n = spec.n_risky;
  const int horizon = spec.horizon;

  ReturnPaths out;
  out.n_paths = spec.n_paths;
  out.horizon = horizon;
  out.n_risky = n;
  out.bond_return = spec.bond_return();

  auto uni = make_engine(spec.seed, kUniverseStream, 0);
  auto draw = [&uni](Interval iv) {
    return std::uniform_real_distribution<double>(iv.lo, iv.hi)(uni);
  };
  out.universe.alpha.resize(n);
  out.universe.beta.resize(n);
  out.universe.prices.resize(n);
  for (int i = 0; i < n; ++i) out.universe.alpha[i] = draw(spec.alpha_range);
  for (int i = 0; i < n; ++i) out.universe.beta[i] = draw(spec.beta_range);
  for (int i = 0; i < n; ++i) out.universe.prices[i] = draw(spec.price_range);

  const Vec alpha = spec.alpha_annualized ? Vec(out.universe.alpha * spec.dt) : out.universe.alpha;
  const Vec& beta = out.universe.beta;
  const Vec idio = (spec.sigma_i * std::sqrt(spec.dt)) *
                   (1.0 - beta.array().square()).sqrt().matrix();
  const double drift = spec.mu_m * spec.dt;
  const double vol = spec.sigma_m * std::sqrt(spec.dt);

  out.expected.assign(spec.n_paths, Mat(horizon, n));
  out.realized.assign(spec.n_paths, Mat(horizon, n));
  out.market.resize(spec.n_paths, horizon);

  for (int p = 0; p < spec.n_paths; ++p) {
    auto eng = make_engine(spec.seed, kPathStream, static_cast<std::uint64_t>(p));
    std::normal_distribution<double> normal(0.0, 1.0);
    Mat& expected = out.expected[p];
    Mat& realized = out.realized[p];
    for (int t = 0; t < horizon; ++t) {
      const double zm = normal(eng);
      const double rm = spec.exponential_gbm
                            ? std::expm1((spec.mu_m - 0.5 * spec.sigma_m * spec.sigma_m) * spec.dt + vol * zm)
                            : drift + vol * zm;
      out.market(p, t) = rm;
      const double signal = (1.0 - spec.oracle_c) * drift + spec.oracle_c * rm;
      for (int i = 0; i < n; ++i) {
        const double rbar = alpha[i] + beta[i] * signal;
        expected(t, i) = rbar;
        realized(t, i) = rbar + beta[i] * (rm - drift) + idio[i] * normal(eng);
      }
    }
  }
  return out;
}

ReturnCovariance residual_covariance(const ReturnPaths& paths) {
  paths.validate_shape();
  const int n = paths.n_risky;
  const long samples = static_cast<long>(paths.n_paths) * paths.horizon;
  if (samples < 10L * n)
    throw EstimationError("residual covariance: need at least 10 x n_risky samples, have " +
                          std::to_string(samples));

  Vec mean = Vec::Zero(n);
  for (int p = 0; p < paths.n_paths; ++p)
    mean += (paths.realized[p] - paths.expected[p]).colwise().sum().transpose();
  mean /= static_cast<double>(samples);

  Mat cov = Mat::Zero(n, n);
  for (int p = 0; p < paths.n_paths; ++p) {
    const Mat resid = (paths.realized[p] - paths.expected[p]).rowwise() - mean.transpose();
    cov.noalias() += resid.transpose() * resid;
  }
  cov /= static_cast<double>(samples - 1);
  cov = symmetrized(cov);

  // Ridge scaled to the data so that an all-zero covariance stays ~0.
  if (!is_spd(cov)) {
    const double scale = std::max(cov.diagonal().mean(), 1e-4);
    double ridge = 1e-10 * scale;
    for (int k = 0; k < 12 && !is_spd(cov); ++k) {
      cov.diagonal().array() += ridge;
      ridge *= 10.0;
    }
    if (!is_spd(cov)) throw EstimationError("residual covariance is not positive definite");
  }
  return {cov};
}

std::vector<Vec> expected_return_path(const ReturnPaths& paths) {
  paths.validate_shape();
  std::vector<Vec> out(paths.horizon, Vec::Zero(paths.n_assets()));
  for (int t = 0; t < paths.horizon; ++t) {
    Vec acc = Vec::Zero(paths.n_risky);
    for (int p = 0; p < paths.n_paths; ++p) acc += paths.expected[p].row(t).transpose();
    out[t][0] = paths.bond_return;
    out[t].tail(paths.n_risky) = acc / static_cast<double>(paths.n_paths);
  }
  return out;
}

std::pair<Vec, Vec> asset_mean_returns(const ReturnPaths& paths) {
  paths.validate_shape();
  Vec e = Vec::Zero(paths.n_risky);
  Vec r = Vec::Zero(paths.n_risky);
  for (int p = 0; p < paths.n_paths; ++p) {
    e += paths.expected[p].colwise().sum().transpose();
    r += paths.realized[p].colwise().sum().transpose();
  }
  const double denom = static_cast<double>(paths.n_paths) * paths.horizon;
  return {e / denom, r / denom};
}

}  // namespace glearn
