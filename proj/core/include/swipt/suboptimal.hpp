#pragma once

#include <optional>

#include "swipt/model.hpp"
#include "swipt/sdr.hpp"

namespace swipt {

struct PowerSearchConfig {
  int grid_points = 2000;
  /// Absolute tolerance on the information-beam power; 0 selects 1e-9 * P.
  double bisection_tol = 0.0;
};

/// Outcome of one low-complexity design. `value` is the secrecy rate for P1
/// designs and the weighted harvested energy for P2 designs, both
/// re-evaluated from the beams.
struct SuboptimalResult {
  double value = 0.0;
  BeamformingSolution solution;
  /// Power on the information beam.
  double p0 = 0.0;
  /// Feasible information-beam power range found by the search (design II).
  std::optional<double> p0_min;
  std::optional<double> p0_max;
};

/// Information beam in the null space of every ER channel, energy beams in
/// the null space of h carrying the minimum-power energy covariance.
/// Throws NullSpaceUnavailable when K >= M and Infeasible when the energy
/// beams leave no power for information.
SuboptimalResult p1_sub1(const SystemModel& model, const SdrOptions& opts = {});

/// Information beam along h, energy beams with the design-I shape scaled to
/// the remaining power; searches the information power on a grid with
/// golden-section refinement. Throws EmptyFeasibleSet when no power split
/// meets the energy targets and Infeasible when the design-I energy
/// covariance does not fit the budget.
SuboptimalResult p1_sub2(const SystemModel& model, const PowerSearchConfig& cfg = {}, const SdrOptions& opts = {});

/// Information power (2^r - 1) sigma0^2 / |V^H h|^2 for the null-space beam.
/// Throws NullSpaceUnavailable when K >= M.
double p2_sub1_info_power(const SystemModel& model);

/// Throws NullSpaceUnavailable when K >= M and PowerDeficit when the
/// information power exceeds the budget.
SuboptimalResult p2_sub1(const SystemModel& model);

/// Information beam along h, one energy beam in the null space of h. Picks
/// the largest or smallest feasible information power depending on which
/// beam couples more energy into the ERs. Throws EmptyFeasibleSet.
SuboptimalResult p2_sub2(const SystemModel& model, const PowerSearchConfig& cfg = {});

}  // namespace swipt
