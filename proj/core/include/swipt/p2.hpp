#pragma once

#include <vector>

#include "swipt/model.hpp"
#include "swipt/outer_search.hpp"
#include "swipt/sdr.hpp"

namespace swipt {

/// Optimal value of the P2 inner problem at one IR SINR target.
struct G2Result {
  double value = 0.0;           // weighted harvested energy (W)
  CovariancePair solution;      // rank-one S, physical units
  SdrSolveResult raw;           // relaxed solve before reconstruction
  int raw_rank_S = 0;
  double objective_change = 0.0;  // |value - raw objective| / max(raw objective, tiny)
  double max_violation = 0.0;     // largest relative constraint miss of solution
  /// IR SINR of the energy-floor cross-check solve (when requested).
  std::optional<double> cross_check_sinr;
};

struct P2Result {
  double energy = 0.0;  // weighted energy re-evaluated from the beams
  BeamformingSolution solution;
  double gamma_0_star = 0.0;
  bool boundary = false;
  std::vector<OuterSample> curve;
  G2Result inner;
};

struct EMaxResult {
  double energy = 0.0;
  double psi = 0.0;
  CVector eta;
  BeamformingSolution solution;
};

/// Largest weighted energy with no information transfer: psi * P with psi,
/// eta the top eigenpair of sum_k mu_k zeta g_k g_k^H, sent on one beam.
EMaxResult e_max_noit(const SystemModel& model);

/// True iff the secrecy rate without energy targets reaches r_bar0 - 1e-6.
bool p2_feasible(const SystemModel& model, const OuterSearchConfig& cfg = {}, const SdrOptions& opts = {});

/// Throws Infeasible when the SINR target is unreachable, NumericalTrouble
/// when the solver fails on a feasible target.
G2Result g2(const SystemModel& model, double gamma_0, const SdrOptions& opts = {}, bool cross_check = false);

/// Default interval [2^r_bar0 - 1, P |h|^2 / sigma0^2].
std::pair<double, double> p2_gamma_interval(const SystemModel& model);

/// Throws Infeasible when the rate target exceeds the interference-free
/// capacity and AllGridInfeasible when no inner solve succeeds.
P2Result solve_p2(const SystemModel& model, const OuterSearchConfig& cfg = {}, const SdrOptions& opts = {});

/// Weighted-energy maximization at rate r_tilde0 without the eavesdropper
/// caps; solved once at gamma_0 = 2^r_tilde0 - 1.
P2Result solve_p2_nosc(const SystemModel& model, double r_tilde0, const SdrOptions& opts = {});

/// Largest IR SINR under the eavesdropper cap gamma_e and the power budget.
double max_ir_sinr(const SystemModel& model, double gamma_e, const SdrOptions& opts = {});

}  // namespace swipt
