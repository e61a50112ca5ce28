#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "swipt/channels.hpp"
#include "swipt/metrics.hpp"
#include "swipt/model.hpp"
#include "swipt/outer_search.hpp"
#include "swipt/suboptimal.hpp"

namespace swipt::bench {

enum class ExperimentKind { ReRegionP1, ReRegionP2, OuterCurveP1, OuterCurveP2, ErActivationP1, ErActivationP2, SingleSolve,
                            OracleCheck };

enum class MethodChoice { Optimal, Sub1, Sub2, NoSC };

std::string to_string(ExperimentKind k);
std::string to_string(MethodChoice m);

struct SystemConfig {
  int M = 4;
  int K = 3;
  double p_bar_dbm = 30.0;
  double zeta = 0.5;
  double noise_dbm = -50.0;
  std::vector<double> weights;  // empty: all ones
  /// Per-ER energy target (W) for P1 runs that do not sweep it.
  double e_bar_w = 0.0;
  /// Secrecy-rate target (bps/Hz) for P2 runs that do not sweep it.
  double r_bar0 = 0.0;
};

struct SweepConfig {
  int n_points = 8;
  double lo = 0.0;
  double hi = 0.0;
};

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::SingleSolve;
  /// Problem solved by single_solve and oracle_check runs.
  Problem problem = Problem::P1;
  SystemConfig system;
  ChannelConfig channel;
  SweepConfig sweep;
  std::vector<MethodChoice> methods{MethodChoice::Optimal, MethodChoice::Sub1, MethodChoice::Sub2};
  OuterSearchConfig search;
  PowerSearchConfig power_search;
  int realizations = 1;
  int threads = 1;
  int oracle_resolution = 60;
  std::filesystem::path output_dir = "out";
};

/// Parses the JSON config format documented in the README. Unknown keys,
/// wrong types and out-of-range values throw ConfigError.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// System model for one channel realization (stream = realization index).
SystemModel build_model(const ExperimentConfig& cfg, int realization);

}  // namespace swipt::bench
