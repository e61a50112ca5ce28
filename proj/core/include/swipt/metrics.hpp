#pragma once

#include <string>
#include <vector>

#include "swipt/model.hpp"

namespace swipt {

struct Violation {
  std::string id;     // "power", "energy_<k>", "rate"
  double magnitude;   // amount by which the constraint is missed (> 0)
};

struct MetricsReport {
  double sinr0 = 0.0;
  std::vector<double> sinr;
  /// min_k log2((1 + sinr0) / (1 + sinr_k)); may be negative.
  double raw_rate = 0.0;
  /// max(0, raw_rate).
  double secrecy_rate = 0.0;
  std::vector<double> energy;
  double weighted_energy = 0.0;
  double sum_power = 0.0;
  /// Problem-independent checks only (power budget); see check_constraints.
  std::vector<Violation> violations;

  double min_energy() const;
};

/// Received SINRs, secrecy rate, harvested energy and transmit power of a
/// beam solution.
MetricsReport evaluate(const SystemModel& model, const BeamformingSolution& sol);

/// Same quantities from covariances (S, Q); equal to evaluate() for
/// rank-consistent pairs.
MetricsReport evaluate(const SystemModel& model, const CovariancePair& cov);

enum class Problem { P1, P2 };

/// Power budget (both problems), per-ER energy targets (P1) and the
/// secrecy-rate target (P2). Power and energy use relative tolerance
/// feas_tol; the rate target uses absolute tolerance rate_tol.
std::vector<Violation> check_constraints(const SystemModel& model, const BeamformingSolution& sol, Problem problem,
                                         double feas_tol = Tolerances::kFeas, double rate_tol = 1e-5);

}  // namespace swipt
