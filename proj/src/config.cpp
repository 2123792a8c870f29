#include "glearn/config.hpp"

#include "glearn/error.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace glearn {

namespace {

using nlohmann::json;

class Section {
 public:
  Section(const json& j, std::string name) : j_(j), name_(std::move(name)) {
    if (!j_.is_object()) throw ParameterError("config: '" + name_ + "' must be an object");
  }

  template <class T>
  void get(const char* key, T& out) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) return;
    try {
      out = it->template get<T>();
    } catch (const json::exception&) {
      throw ParameterError("config: " + name_ + "." + key + " has the wrong type");
    }
  }

  void interval(const char* key, Interval& out) {
    std::vector<double> v{out.lo, out.hi};
    get(key, v);
    if (v.size() != 2) throw ParameterError("config: " + name_ + "." + key + " must be [lo, hi]");
    out = {v[0], v[1]};
  }

  const json* child(const char* key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key())) throw ParameterError("config: unknown key " + name_ + "." + it.key());
  }

 private:
  const json& j_;
  std::string name_;
  std::set<std::string> seen_;
};

void theta_fields(Section& s, RewardTheta& th) {
  s.get("lambda", th.lam);
  s.get("eta", th.eta);
  s.get("rho", th.rho);
  s.get("omega", th.omega);
}

json theta_json(const RewardTheta& th) {
  return {{"lambda", th.lam}, {"eta", th.eta}, {"rho", th.rho}, {"omega", th.omega}};
}

}  // namespace

void ExperimentConfig::validate() const {
  market.validate();
  reward_params().validate(market.n_risky + 1);
  if (!(reward.initial_wealth > 0.0)) throw ParameterError("config: initial_wealth must be positive");
  if (!std::isfinite(reward.benchmark_rate)) throw ParameterError("config: benchmark_rate must be finite");
  solver.solver.validate();
  if (!(solver.prior_sigma > 0.0)) throw ParameterError("config: prior_sigma must be positive");
  girl.fit.validate();
  to_unconstrained(girl.theta0);
  if (girl.slice_half_points < 1 || !(girl.slice_rel_halfwidth > 0.0 && girl.slice_rel_halfwidth < 1.0))
    throw ParameterError("config: slice grid must have half_points >= 1 and halfwidth in (0,1)");
}

RewardParams ExperimentConfig::reward_params() const {
  const RewardTheta& th = reward.theta;
  return RewardParams::with_scalar_omega(th.lam, th.eta, th.rho, th.omega, market.n_risky + 1);
}

BenchmarkPath ExperimentConfig::benchmark() const {
  return BenchmarkPath::compounded(reward.initial_wealth, reward.benchmark_rate, market.dt, market.horizon);
}

GaussianPrior ExperimentConfig::prior() const {
  return GaussianPrior::isotropic(market.n_risky + 1, market.horizon, solver.prior_sigma);
}

Vec ExperimentConfig::initial_state() const {
  return equal_weight_state(market.n_risky + 1, reward.initial_wealth);
}

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("config: invalid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  Section top(root, "config");

  if (const json* j = top.child("market")) {
    Section s(*j, "market");
    MarketSpec& m = cfg.market;
    s.get("n_risky", m.n_risky);
    s.get("r_f", m.r_f);
    s.get("mu_m", m.mu_m);
    s.get("sigma_m", m.sigma_m);
    s.get("sigma_i", m.sigma_i);
    s.get("dt", m.dt);
    s.get("oracle_c", m.oracle_c);
    s.interval("alpha_range", m.alpha_range);
    s.interval("beta_range", m.beta_range);
    s.interval("price_range", m.price_range);
    s.get("n_paths", m.n_paths);
    s.get("horizon", m.horizon);
    s.get("alpha_annualized", m.alpha_annualized);
    s.get("exponential_gbm", m.exponential_gbm);
    s.finish();
  }
  if (const json* j = top.child("reward")) {
    Section s(*j, "reward");
    theta_fields(s, cfg.reward.theta);
    s.get("benchmark_rate", cfg.reward.benchmark_rate);
    s.get("initial_wealth", cfg.reward.initial_wealth);
    s.finish();
  }
  if (const json* j = top.child("solver")) {
    Section s(*j, "solver");
    SolverConfig& sc = cfg.solver.solver;
    s.get("beta", sc.beta);
    s.get("gamma", sc.gamma);
    s.get("max_inner_iters", sc.max_inner_iters);
    s.get("inner_tol", sc.inner_tol);
    std::string mode = sc.omega_mode == OmegaMode::derived ? "derived" : "strict_paper";
    s.get("omega_mode", mode);
    if (mode == "derived")
      sc.omega_mode = OmegaMode::derived;
    else if (mode == "strict_paper")
      sc.omega_mode = OmegaMode::strict_paper;
    else
      throw ParameterError("config: solver.omega_mode must be 'derived' or 'strict_paper'");
    s.get("prior_sigma", cfg.solver.prior_sigma);
    s.finish();
  }
  if (const json* j = top.child("girl")) {
    Section s(*j, "girl");
    FitConfig& f = cfg.girl.fit;
    s.get("learning_rate", f.learning_rate);
    s.get("stop_tol", f.stop_tol);
    s.get("max_iters", f.max_iters);
    s.get("fd_step", f.fd_step);
    s.get("adam_beta1", f.adam_beta1);
    s.get("adam_beta2", f.adam_beta2);
    s.get("adam_epsilon", f.adam_epsilon);
    s.get("divergence_window", f.divergence_window);
    s.get("slice_half_points", cfg.girl.slice_half_points);
    s.get("slice_rel_halfwidth", cfg.girl.slice_rel_halfwidth);
    if (const json* t = s.child("theta0")) {
      Section ts(*t, "girl.theta0");
      theta_fields(ts, cfg.girl.theta0);
      ts.finish();
    }
    s.finish();
  }
  if (const json* j = top.child("io")) {
    Section s(*j, "io");
    std::string dir = cfg.io.output_dir.string();
    s.get("output_dir", dir);
    cfg.io.output_dir = dir;
    s.get("seed", cfg.io.seed);
    s.finish();
  }
  top.finish();
  cfg.market.seed = cfg.io.seed;
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) throw MissingInputError("missing input: config file " + file.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str());
}

std::string dump_config(const ExperimentConfig& cfg) {
  const MarketSpec& m = cfg.market;
  const SolverConfig& sc = cfg.solver.solver;
  const FitConfig& f = cfg.girl.fit;
  json reward = theta_json(cfg.reward.theta);
  reward["benchmark_rate"] = cfg.reward.benchmark_rate;
  reward["initial_wealth"] = cfg.reward.initial_wealth;
  json j = {
      {"market",
       {{"n_risky", m.n_risky},
        {"r_f", m.r_f},
        {"mu_m", m.mu_m},
        {"sigma_m", m.sigma_m},
        {"sigma_i", m.sigma_i},
        {"dt", m.dt},
        {"oracle_c", m.oracle_c},
        {"alpha_range", {m.alpha_range.lo, m.alpha_range.hi}},
        {"beta_range", {m.beta_range.lo, m.beta_range.hi}},
        {"price_range", {m.price_range.lo, m.price_range.hi}},
        {"n_paths", m.n_paths},
        {"horizon", m.horizon},
        {"alpha_annualized", m.alpha_annualized},
        {"exponential_gbm", m.exponential_gbm}}},
      {"reward", reward},
      {"solver",
       {{"beta", sc.beta},
        {"gamma", sc.gamma},
        {"max_inner_iters", sc.max_inner_iters},
        {"inner_tol", sc.inner_tol},
        {"omega_mode", sc.omega_mode == OmegaMode::derived ? "derived" : "strict_paper"},
        {"prior_sigma", cfg.solver.prior_sigma}}},
      {"girl",
       {{"learning_rate", f.learning_rate},
        {"stop_tol", f.stop_tol},
        {"max_iters", f.max_iters},
        {"fd_step", f.fd_step},
        {"adam_beta1", f.adam_beta1},
        {"adam_beta2", f.adam_beta2},
        {"adam_epsilon", f.adam_epsilon},
        {"divergence_window", f.divergence_window},
        {"slice_half_points", cfg.girl.slice_half_points},
        {"slice_rel_halfwidth", cfg.girl.slice_rel_halfwidth},
        {"theta0", theta_json(cfg.girl.theta0)}}},
      {"io", {{"output_dir", cfg.io.output_dir.string()}, {"seed", cfg.io.seed}}}};
  return j.dump(2);
}

}  // namespace glearn
