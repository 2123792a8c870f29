#include "glearn/cli.hpp"

#include "glearn/config.hpp"
#include "glearn/error.hpp"
#include "glearn/girl.hpp"
#include "glearn/io.hpp"
#include "glearn/metrics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace glearn {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum class Level { quiet = 0, info = 1, debug = 2 };

Level log_level() {
  const char* env = std::getenv("GLEARN_LOG");
  if (!env) return Level::info;
  const std::string v(env);
  if (v == "quiet" || v == "0") return Level::quiet;
  if (v == "debug" || v == "2") return Level::debug;
  return Level::info;
}

void log(Level level, const std::string& msg) {
  static const Level current = log_level();
  if (level <= current) std::cerr << "glearn: " << msg << '\n';
}

// Files created by the running subcommand; removed again if it fails.
class Outputs {
 public:
  explicit Outputs(fs::path dir) : dir_(std::move(dir)) {}

  fs::path add(const std::string& name) {
    fs::path p = dir_ / name;
    files_.push_back(p);
    return p;
  }
  const fs::path& dir() const { return dir_; }

  void prepare() {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw Error("cannot create output directory " + dir_.string() + ": " + ec.message());
  }

  void rollback() const {
    std::error_code ec;
    for (const auto& f : files_) fs::remove(f, ec);
  }

 private:
  fs::path dir_;
  std::vector<fs::path> files_;
};

struct Common {
  std::string config;
  std::string out;
  std::string in;
  std::optional<std::uint64_t> seed;
};

ExperimentConfig load(const Common& c) {
  ExperimentConfig cfg = c.config.empty() ? parse_config("{}") : load_config(c.config);
  if (c.seed) {
    cfg.io.seed = *c.seed;
    cfg.market.seed = *c.seed;
  }
  if (!c.out.empty()) cfg.io.output_dir = c.out;
  return cfg;
}

fs::path input_dir(const Common& c, const ExperimentConfig& cfg) {
  return c.in.empty() ? cfg.io.output_dir : fs::path(c.in);
}

void require_file(const fs::path& p) {
  if (!fs::exists(p)) throw MissingInputError("missing input: " + p.string());
}

void write_json(const fs::path& file, const json& j) {
  std::ofstream os(file);
  if (!os) throw Error("cannot open " + file.string() + " for writing");
  os << j.dump(2) << '\n';
  if (!os) throw Error("write failed: " + file.string());
}

json theta_json(const RewardTheta& th) {
  return {{"lambda", th.lam}, {"eta", th.eta}, {"rho", th.rho}, {"omega", th.omega}};
}

// Stage implementations shared by the single-stage commands and repro.

struct MarketData {
  ReturnPaths paths;
  ReturnCovariance cov;
};

MarketData do_simulate(const ExperimentConfig& cfg, Outputs& out) {
  log(Level::info, "simulating " + std::to_string(cfg.market.n_paths) + " paths of " +
                       std::to_string(cfg.market.horizon) + " periods, " + std::to_string(cfg.market.n_risky) +
                       " risky assets");
  MarketData d{simulate(cfg.market), {}};
  d.cov = residual_covariance(d.paths);

  for (const char* name : {"returns_expected.csv", "returns_realized.csv", "market.csv", "universe.csv"})
    out.add(name);
  io::write_returns(out.dir(), d.paths);
  io::write_matrix(out.add("sigma_r.csv"), d.cov.sigma_r);

  const auto [expected, realized] = asset_mean_returns(d.paths);
  io::CsvWriter w(out.add("asset_returns.csv"), {"asset", "mean_expected", "mean_realized"});
  for (Eigen::Index a = 0; a < expected.size(); ++a) {
    w.add(static_cast<long long>(a + 1)).add(expected[a]).add(realized[a]);
    w.end_row();
  }
  w.close();
  return d;
}

GirlFixed fixed_inputs(const ExperimentConfig& cfg, const std::vector<Vec>& rbar, const ReturnCovariance& cov) {
  return {rbar, cov, cfg.benchmark(), cfg.prior(), cfg.solver.solver};
}

SolvedPlan do_solve(const ExperimentConfig& cfg, const RewardTheta& theta, const std::vector<Vec>& rbar,
                    const ReturnCovariance& cov) {
  const RewardParams params =
      RewardParams::with_scalar_omega(theta.lam, theta.eta, theta.rho, theta.omega, cfg.market.n_risky + 1);
  return solve(params, rbar, cov, cfg.benchmark(), cfg.prior(), cfg.solver.solver);
}

struct FitOutcome {
  FitReport report;
  std::array<LossSlice, 4> slices;
};

FitOutcome do_fit(const ExperimentConfig& cfg, const std::vector<Trajectory>& trajs, const std::vector<Vec>& rbar,
                  const ReturnCovariance& cov, Outputs& out) {
  log(Level::info, "fitting reward parameters to " + std::to_string(trajs.size()) + " trajectories");
  const GirlObjective objective(fixed_inputs(cfg, rbar, cov), trajs);
  const FitObserver observe = [](int k, double loss, const RewardTheta& th) {
    if (k % 10 == 0 || k == 1)
      log(Level::debug, "iter " + std::to_string(k) + " nll " + io::format_double(loss) + " lambda " +
                            io::format_double(th.lam) + " eta " + io::format_double(th.eta) + " rho " +
                            io::format_double(th.rho) + " omega " + io::format_double(th.omega));
  };
  FitOutcome res{fit(objective, cfg.girl.fit, cfg.girl.theta0, observe), {}};
  const FitReport& r = res.report;
  log(Level::info, "fit finished after " + std::to_string(r.iterations) + " iterations" +
                       (r.converged ? " (converged)" : " (iteration limit)"));

  write_json(out.add("girl_report.json"), {{"theta", theta_json(r.params)},
                                           {"theta0", theta_json(cfg.girl.theta0)},
                                           {"truth", theta_json(cfg.reward.theta)},
                                           {"iterations", r.iterations},
                                           {"converged", r.converged},
                                           {"final_loss", r.final_loss},
                                           {"loss_path", r.loss_path}});

  log(Level::info, "scanning the loss around the configured reward parameters");
  res.slices = loss_slices(objective, cfg.reward.theta, cfg.girl.slice_half_points, cfg.girl.slice_rel_halfwidth);
  io::CsvWriter w(out.add("loss_slices.csv"), {"parameter", "value", "nll"});
  for (const LossSlice& s : res.slices)
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
      w.add(coordinate_name(s.coordinate)).add(s.grid[k]).add(s.loss[k]);
      w.end_row();
    }
  w.close();
  return res;
}

void do_report(const ExperimentConfig& cfg, const ReturnPaths& paths,
               const std::vector<std::pair<std::string, std::vector<Trajectory>>>& strategies, Outputs& out) {
  const double r_f = cfg.market.r_f;
  const double dt = cfg.market.dt;
  std::vector<std::pair<std::string, std::vector<Trajectory>>> all = strategies;
  all.emplace_back("equal_weight", equal_weight_baseline(paths, cfg.initial_state()));

  io::CsvWriter perf(out.add("performance.csv"), {"strategy", "period", "mean_return"});
  io::CsvWriter growth(out.add("growth.csv"), {"strategy", "period", "mean_growth_index"});
  json summary;
  for (const auto& [name, trajs] : all) {
    const PerformanceSummary s = summarize(trajs, r_f, dt, cfg.reward_params(), cfg.benchmark());
    for (Eigen::Index t = 0; t < s.mean_returns.size(); ++t) {
      perf.add(name).add(static_cast<long long>(t)).add(s.mean_returns[t]);
      perf.end_row();
    }
    const Vec g = mean_growth_index(trajs);
    for (Eigen::Index t = 0; t < g.size(); ++t) {
      growth.add(name).add(static_cast<long long>(t)).add(g[t]);
      growth.end_row();
    }
    summary["sharpe"][name] = s.sharpe;
    summary["terminal_wealth"][name] = {{"mean", s.terminal_wealth.mean},
                                        {"stddev", s.terminal_wealth.stddev},
                                        {"q05", s.terminal_wealth.q05},
                                        {"q50", s.terminal_wealth.q50},
                                        {"q95", s.terminal_wealth.q95}};
    log(Level::info, name + ": Sharpe " + io::format_double(s.sharpe));
  }
  perf.close();
  growth.close();
  write_json(out.add("summary.json"), summary);

  if (!strategies.empty()) {
    const Vec c = mean_cash(strategies.front().second);
    io::CsvWriter w(out.add("cash_profile.csv"), {"period", "mean_cash", "cumulative_cash"});
    double cum = 0.0;
    for (Eigen::Index t = 0; t < c.size(); ++t) {
      cum += c[t];
      w.add(static_cast<long long>(t)).add(c[t]).add(cum);
      w.end_row();
    }
    w.close();
  }
}

MarketData read_market(const ExperimentConfig& cfg, const fs::path& dir) {
  require_file(dir / "returns_expected.csv");
  require_file(dir / "sigma_r.csv");
  MarketData d;
  d.paths.bond_return = cfg.market.bond_return();
  d.cov.sigma_r = io::read_matrix(dir / "sigma_r.csv");
  if (fs::exists(dir / "returns_realized.csv")) {
    d.paths = io::read_returns(dir, cfg.market.bond_return());
  } else {
    d.paths.expected = io::read_return_panel(dir / "returns_expected.csv");
    d.paths.n_paths = static_cast<int>(d.paths.expected.size());
    d.paths.horizon = d.paths.n_paths ? static_cast<int>(d.paths.expected.front().rows()) : 0;
    d.paths.n_risky = d.paths.n_paths ? static_cast<int>(d.paths.expected.front().cols()) : 0;
  }
  if (d.cov.sigma_r.rows() != d.paths.n_risky || d.cov.sigma_r.cols() != d.paths.n_risky)
    throw ShapeError("sigma_r.csv does not match the number of risky assets in the return files");
  if (d.paths.n_risky != cfg.market.n_risky || d.paths.horizon != cfg.market.horizon)
    throw ShapeError("return files do not match market.n_risky / market.horizon in the config");
  return d;
}

int run(const std::string& cmd, const Common& common, const std::string& plan_arg, const std::string& traj_arg) {
  const ExperimentConfig cfg = load(common);
  Outputs out(cfg.io.output_dir);
  const fs::path in = input_dir(common, cfg);

  // Inputs are checked before anything is written.
  if (cmd == "fit") require_file(traj_arg.empty() ? in / "trajectories.csv" : fs::path(traj_arg));
  if (cmd == "rollout") require_file(plan_arg.empty() ? in / "plan.bin" : fs::path(plan_arg));
  if (cmd == "report") require_file(in / "trajectories.csv");

  out.prepare();
  try {
    if (cmd == "simulate") {
      do_simulate(cfg, out);
    } else if (cmd == "solve") {
      const MarketData d = read_market(cfg, in);
      const SolvedPlan plan = do_solve(cfg, cfg.reward.theta, expected_return_path(d.paths), d.cov);
      io::write_plan(out.add("plan.bin"), plan);
    } else if (cmd == "rollout") {
      const MarketData d = read_market(cfg, in);
      require_file(in / "returns_realized.csv");
      const SolvedPlan plan = io::read_plan(plan_arg.empty() ? in / "plan.bin" : fs::path(plan_arg));
      const auto trajs = rollout(plan, d.paths, cfg.initial_state(), cfg.io.seed);
      out.add("trajectories.csv");
      out.add("cash.csv");
      io::write_trajectories(out.dir(), trajs);
    } else if (cmd == "fit") {
      const MarketData d = read_market(cfg, in);
      const auto trajs = io::read_trajectories(traj_arg.empty() ? in / "trajectories.csv" : fs::path(traj_arg));
      do_fit(cfg, trajs, expected_return_path(d.paths), d.cov, out);
    } else if (cmd == "report") {
      const MarketData d = read_market(cfg, in);
      require_file(in / "returns_realized.csv");
      std::vector<std::pair<std::string, std::vector<Trajectory>>> strategies;
      strategies.emplace_back("g_learner", io::read_trajectories(in / "trajectories.csv"));
      if (fs::exists(in / "trajectories_fitted.csv"))
        strategies.emplace_back("g_learner_fitted", io::read_trajectories(in / "trajectories_fitted.csv"));
      do_report(cfg, d.paths, strategies, out);
    } else if (cmd == "repro") {
      {
        std::ofstream os(out.add("config_used.json"));
        os << dump_config(cfg) << '\n';
      }
      const MarketData d = do_simulate(cfg, out);
      const std::vector<Vec> rbar = expected_return_path(d.paths);
      const Vec x0 = cfg.initial_state();

      log(Level::info, "solving with the configured reward parameters");
      const SolvedPlan plan = do_solve(cfg, cfg.reward.theta, rbar, d.cov);
      io::write_plan(out.add("plan.bin"), plan);
      const auto trajs = rollout(plan, d.paths, x0, cfg.io.seed);
      out.add("trajectories.csv");
      out.add("cash.csv");
      io::write_trajectories(out.dir(), trajs);

      const FitOutcome fitted = do_fit(cfg, trajs, rbar, d.cov, out);
      const RewardTheta& th = fitted.report.params;
      io::CsvWriter rec(out.add("parameter_recovery.csv"), {"parameter", "truth", "fitted"});
      const RewardTheta& truth = cfg.reward.theta;
      rec.add("rho").add(truth.rho).add(th.rho).end_row();
      rec.add("lambda").add(truth.lam).add(th.lam).end_row();
      rec.add("eta").add(truth.eta).add(th.eta).end_row();
      rec.add("omega").add(truth.omega).add(th.omega).end_row();
      rec.close();

      log(Level::info, "rolling out the fitted reward parameters");
      const SolvedPlan plan_fit = do_solve(cfg, th, rbar, d.cov);
      io::write_plan(out.add("plan_fitted.bin"), plan_fit);
      const auto trajs_fit = rollout(plan_fit, d.paths, x0, cfg.io.seed);
      out.add("trajectories_fitted.csv");
      out.add("cash_fitted.csv");
      io::write_trajectories(out.dir(), trajs_fit, "trajectories_fitted", "cash_fitted");

      do_report(cfg, d.paths, {{"g_learner", trajs}, {"g_learner_fitted", trajs_fit}}, out);
    }
  } catch (...) {
    out.rollback();
    throw;
  }
  log(Level::info, cmd + ": outputs in " + out.dir().string());
  return 0;
}

}  // namespace

int run_subcommand(const std::vector<std::string>& args) {
  CLI::App app{"G-learning portfolio planner and inverse reward estimation"};
  app.require_subcommand(1);
  Common common;
  std::string plan_arg;
  std::string traj_arg;

  auto add_common = [&](CLI::App* sub, bool reads) {
    sub->add_option("-c,--config", common.config, "JSON config file");
    sub->add_option("-o,--out", common.out, "output directory (overrides io.output_dir)");
    sub->add_option("--seed", common.seed, "seed (overrides io.seed)");
    if (reads) sub->add_option("-i,--in", common.in, "input directory (default: output directory)");
  };
  add_common(app.add_subcommand("simulate", "simulate return paths and estimate the residual covariance"), false);
  add_common(app.add_subcommand("solve", "solve for the policy under the configured reward"), true);
  auto* ro = app.add_subcommand("rollout", "sample trajectories from a plan");
  add_common(ro, true);
  ro->add_option("--plan", plan_arg, "plan file (default: <in>/plan.bin)");
  auto* fi = app.add_subcommand("fit", "recover reward parameters from trajectories");
  add_common(fi, true);
  fi->add_option("--trajectories", traj_arg, "trajectory file (default: <in>/trajectories.csv)");
  add_common(app.add_subcommand("report", "performance summary against the equal-weight baseline"), true);
  add_common(app.add_subcommand("repro", "run every stage from one seed"), false);

  if (!args.empty() && !args.front().starts_with('-') && !app.get_subcommand_no_throw(args.front())) {
    std::cerr << "glearn: error: unknown subcommand '" << args.front()
              << "' (expected simulate, solve, rollout, fit, report or repro)\n";
    return 1;
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "glearn: error: " << e.what() << '\n';
    return 1;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, common, plan_arg, traj_arg);
  } catch (const MissingInputError& e) {
    std::cerr << "glearn: error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "glearn: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace glearn
