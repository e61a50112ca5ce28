#pragma once

#include <vector>

#include "swipt/model.hpp"
#include "swipt/outer_search.hpp"
#include "swipt/sdr.hpp"

namespace swipt {

/// Optimal value of the P1 inner problem at one eavesdropper SINR cap.
struct G1Result {
  double value = 0.0;          // Tr(H S) / (Tr(H Q) + sigma0^2)
  CovariancePair solution;     // rank-one S, in physical units (t absent)
  SdrSolveResult raw;          // relaxed solve before reconstruction
  int raw_rank_S = 0;          // rank of the relaxed S relative to Tr(S + Q)
  bool degenerate = false;     // relaxed S carries no power toward h
  double max_violation = 0.0;  // largest relative constraint miss of solution
};

struct P1Result {
  /// Secrecy rate re-evaluated from the beams (plain IR rate for NoSC).
  double rate = 0.0;
  BeamformingSolution solution;
  double gamma_e_star = 0.0;
  /// Outer objective log2((1 + g1) / (1 + gamma_e)) at gamma_e_star.
  double outer_value = 0.0;
  bool boundary = false;
  std::vector<OuterSample> curve;
  G1Result inner;  // inner solve at gamma_e_star
};

/// True iff the minimum power meeting every energy target fits the budget.
bool p1_feasible(const SystemModel& model, const SdrOptions& opts = {});

/// Throws Infeasible / NumericalTrouble when the relaxed solve fails.
G1Result g1(const SystemModel& model, double gamma_e, const SdrOptions& opts = {});

/// Default eavesdropper SINR interval [1e-4, P max_k |g_k|^2 / sigma_k^2].
std::pair<double, double> p1_gamma_interval(const SystemModel& model);

/// Throws Infeasible when p1_feasible is false and AllGridInfeasible when
/// no inner solve succeeds.
P1Result solve_p1(const SystemModel& model, const OuterSearchConfig& cfg = {}, const SdrOptions& opts = {});

/// solve_p1 with every energy target set to zero.
P1Result solve_p1_noet(const SystemModel& model, const OuterSearchConfig& cfg = {}, const SdrOptions& opts = {});

/// Inner problem without the eavesdropper caps; rate = log2(1 + SINR0).
P1Result solve_p1_nosc(const SystemModel& model, const SdrOptions& opts = {});

/// Energy beams from an energy covariance: every eigenpair above
/// rel_tol * reference (negative numerical noise dropped).
std::vector<CVector> energy_beams(const HermitianMatrix& Q, double rel_tol, double reference);

/// Beams from a rank-one S (taken along its top eigenvector) and Q.
BeamformingSolution beams_from_covariances(const CovariancePair& cov, Method method);

}  // namespace swipt
