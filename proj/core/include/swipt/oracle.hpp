#pragma once

#include "swipt/metrics.hpp"
#include "swipt/model.hpp"

namespace swipt {

struct OracleResult {
  /// Secrecy rate (P1) or weighted harvested energy (P2) of the best grid point.
  double objective = 0.0;
  BeamformingSolution solution;
  /// Grid points examined after discarding dominated energy patterns.
  long long evaluations = 0;
};

/// Exhaustive search for M = 2, K <= 2 over the information-beam direction
/// (cos a, sin a e^{jb}) with a on `resolution` points of [0, pi/2] and b on
/// `resolution` points of [0, 2 pi), the energy-beam direction on the same
/// grid, and the information power P i / resolution with the rest on energy.
/// K = 2 adds a second energy beam orthogonal to the first with its power
/// share on the same grid. Energy patterns that leak more to the IR and
/// deliver less to every ER than another pattern are skipped, which leaves
/// the grid maximum unchanged. Throws EmptyFeasibleSet when no grid point
/// meets the energy targets (P1) or the rate target (P2).
OracleResult brute_force_oracle(const SystemModel& model, Problem problem, int resolution);

}  // namespace swipt
