#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swipt/bench/config.hpp"
#include "swipt/sdr.hpp"

namespace swipt::bench {

enum class PointStatus { Ok, Infeasible, NumericalTrouble, Partial };

std::string to_string(PointStatus s);

/// One (constraint value or active-ER count, method) result.
struct PointResult {
  double x = 0.0;  // E_bar (W), r_bar0 (bps/Hz) or number of active ERs
  MethodChoice method = MethodChoice::Optimal;
  int realization = 0;
  PointStatus status = PointStatus::Ok;
  double rate = 0.0;    // secrecy rate from the beams (plain IR rate for nosc)
  double energy = 0.0;  // min-per-ER energy for P1, weighted sum for P2
  std::optional<double> gamma_star;
  std::optional<BeamformingSolution> solution;
  std::string detail;  // exception text for failed points
};

struct CurveSample {
  double gamma = 0.0;
  std::optional<double> value;
  bool maximizer = false;
};

struct OracleRow {
  int realization = 0;
  Problem problem = Problem::P1;
  std::optional<double> solver;
  std::optional<double> oracle;
  double rel_diff = 0.0;
  std::string status;  // ok, mismatch, infeasible_both, numerical_trouble
};

struct RunOutput {
  ExperimentKind kind = ExperimentKind::SingleSolve;
  /// Per-realization rows in sweep order, then method order.
  std::vector<PointResult> points;
  /// Mean over realizations; equal to `points` for a single realization.
  std::vector<PointResult> summary;
  std::vector<CurveSample> curve;
  std::vector<OracleRow> oracle;
  std::vector<std::string> warnings;

  bool numerical_trouble() const;
};

/// P1 method at one model; never throws for infeasible or failed solves.
PointResult solve_p1_method(const SystemModel& model, MethodChoice method, const ExperimentConfig& cfg,
                            const SdrOptions& opts = {});
PointResult solve_p2_method(const SystemModel& model, MethodChoice method, const ExperimentConfig& cfg,
                            const SdrOptions& opts = {});

std::vector<double> sweep_values(const SweepConfig& sweep);

RunOutput run_re_region_p1(const ExperimentConfig& cfg, const SdrOptions& opts = {});
RunOutput run_re_region_p2(const ExperimentConfig& cfg, const SdrOptions& opts = {});
RunOutput run_outer_curve(const ExperimentConfig& cfg, Problem problem, const SdrOptions& opts = {});
RunOutput run_er_activation(const ExperimentConfig& cfg, Problem problem, const SdrOptions& opts = {});
RunOutput run_single_solve(const ExperimentConfig& cfg, const SdrOptions& opts = {});
RunOutput run_oracle_check(const ExperimentConfig& cfg, const SdrOptions& opts = {});

/// Dispatches on cfg.experiment.
RunOutput run_experiment(const ExperimentConfig& cfg, const SdrOptions& opts = {});

/// Runs tasks on `threads` workers; results are stored by task index.
template <typename T>
std::vector<T> run_ordered(const std::vector<std::function<T()>>& tasks, int threads);

}  // namespace swipt::bench

#include "swipt/bench/runner_impl.hpp"
