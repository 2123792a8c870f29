#pragma once

#include "glearn/girl.hpp"
#include "glearn/glearner.hpp"
#include "glearn/market.hpp"
#include "glearn/rewards.hpp"

#include <filesystem>
#include <string>

namespace glearn {

struct RewardSection {
  RewardTheta theta;              // ground-truth reward used to generate data
  double benchmark_rate = 0.5;    // continuously compounded, annual
  double initial_wealth = 1000.0; // split equally across all assets at t = 0
};

struct SolverSection {
  SolverConfig solver;
  double prior_sigma = 10.0;  // reference policy N(0, prior_sigma^2 I)
};

struct GirlSection {
  FitConfig fit;
  RewardTheta theta0{0.002, 2.02, 0.8, 0.3};
  int slice_half_points = 10;
  double slice_rel_halfwidth = 0.2;
};

struct IoSection {
  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 42;
};

struct ExperimentConfig {
  MarketSpec market;
  RewardSection reward;
  SolverSection solver;
  GirlSection girl;
  IoSection io;

  void validate() const;

  RewardParams reward_params() const;
  BenchmarkPath benchmark() const;
  GaussianPrior prior() const;
  Vec initial_state() const;
};

// Missing keys keep their defaults; unknown keys are an error.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& file);
std::string dump_config(const ExperimentConfig& cfg);

}  // namespace glearn
