#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swipt/conic.hpp"
#include "swipt/model.hpp"
#include "swipt/status.hpp"

namespace swipt {

struct SdrOptions {
  /// Backend; nullptr selects default_solver().
  const ConicSolver* solver = nullptr;
  /// Called with a short problem name and the built SDP before each solve.
  std::function<void(const std::string&, const ConicSdp&)> on_build;
  double psd_tol = Tolerances::kPsd;
  double rank_tol = Tolerances::kRank;
  double feas_tol = Tolerances::kFeas;
};

/// Result of one relaxed problem, in physical units.
///
/// For the Charnes-Cooper forms primal holds the transformed variables
/// (S, Q, t) with S = t * S_orig; for the other forms t is absent.
struct SdrSolveResult {
  SolveStatus status = SolveStatus::NumericalTrouble;
  CovariancePair primal;
  std::optional<DualCertificate> duals;  // P1.1 Charnes-Cooper form only
  std::vector<double> multipliers;       // every constraint, in build order
  double objective = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;

  bool ok() const { return status == SolveStatus::Optimal; }
};

/// Minimum transmit power meeting every energy target:
/// minimize Tr(Q) s.t. zeta Tr(G_k Q) >= E_k. Status is Infeasible when that
/// power exceeds p_bar (1 + feas_tol); objective is the minimum power.
SdrSolveResult solve_p1_noit(const SystemModel& model, const SdrOptions& opts = {});

/// Charnes-Cooper form of the P1 inner problem with eavesdropper SINR cap
/// gamma_e: maximize Tr(H S) over (S, Q, t) subject to
///   Tr(H Q) + t sigma0^2 = 1,
///   Tr(G_k S) <= gamma_e (Tr(G_k Q) + t sigma_k^2),
///   zeta Tr(G_k (S + Q)) >= E_k t,
///   Tr(S + Q) <= P t.
/// Duals are reported in this order as (lambda, beta, alpha, theta).
SdrSolveResult solve_p11_sdr_eqv(const SystemModel& model, double gamma_e, const SdrOptions& opts = {});

/// Same problem without the eavesdropper caps.
SdrSolveResult solve_p1_nosc_sdr(const SystemModel& model, const SdrOptions& opts = {});

/// Weighted-energy maximization at IR SINR target gamma_0 with eavesdropper
/// cap gamma_e = (1 + gamma_0) / 2^r_bar0 - 1:
/// maximize sum_k mu_k zeta Tr(G_k (S + Q)) subject to
///   Tr(H S) >= gamma_0 (Tr(H Q) + sigma0^2),
///   Tr(G_k S) <= gamma_e (Tr(G_k Q) + sigma_k^2),
///   Tr(S + Q) <= P.
/// With gamma_e = 0, S is restricted to the null space of every ER channel.
SdrSolveResult solve_p21_sdr(const SystemModel& model, double gamma_0, const SdrOptions& opts = {});

/// Charnes-Cooper maximization of the IR SINR subject to the eavesdropper caps,
/// the power budget and a weighted-energy floor e_star. Objective is the SINR.
SdrSolveResult solve_p21_sdr_new(const SystemModel& model, double gamma_e, double e_star,
                                 const SdrOptions& opts = {});

/// solve_p21_sdr without the eavesdropper caps.
SdrSolveResult solve_p2_nosc_sdr(const SystemModel& model, double gamma_0, const SdrOptions& opts = {});

/// Minimum-power energy covariance in the reduced coordinates of g_tilde:
/// minimize Tr(Q) s.t. zeta Tr(G_tilde_k Q) >= E_k. Reports Optimal whatever
/// the resulting power; callers compare against the budget.
SdrSolveResult solve_p1_sub1_sdp(const SystemModel& model, const std::vector<HermitianMatrix>& g_tilde,
                                 const SdrOptions& opts = {});

/// S_bar = S h h^H S / (h^H S h), Q_bar = Q + S - S_bar.
/// Throws DegenerateInput when h^H S h <= psd_tol * Tr(S).
CovariancePair reconstruct_rank_one(const HermitianMatrix& S, const HermitianMatrix& Q, const CVector& h,
                                    double psd_tol = Tolerances::kPsd);

/// Rank reduction that keeps Tr(A_i X) fixed for every preserved A_i and
/// X PSD; the result has rank r with r^2 <= preserved.size() (or 1).
/// Eigenvalues below rank_tol * Tr(X) are dropped.
HermitianMatrix reduce_rank(const HermitianMatrix& X, const std::vector<HermitianMatrix>& preserved,
                            double rank_tol = Tolerances::kRank);

struct RankOneReport {
  double dual_act_tol = 0.0;
  int active_caps = 0;             // |Psi_bar|: ERs with beta_k above dual_act_tol
  bool active_caps_sufficient = false;  // |Psi_bar| >= min(M - 1, K)
  bool lambda_positive = false;
  bool theta_positive = false;
  int rank_S = 0;
  int rank_Q = 0;
  bool rank_Q_bounded = false;     // rank(Q) <= min(K, M)
  /// x^H (sum_{inactive} alpha_k zeta G_k - theta I) x = 0 together with
  /// h^H x = 0, g_k^H x = 0 (active k) has only the zero solution.
  bool unique_rank_one_certified = false;
};

/// Diagnostics for an Optimal solve_p11_sdr_eqv result. Ranks are measured
/// relative to Tr(S + Q) with opts.rank_tol.
RankOneReport rank_one_diagnostics(const SdrSolveResult& result, const SystemModel& model, double gamma_e,
                                   const SdrOptions& opts = {});

}  // namespace swipt
