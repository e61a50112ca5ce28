#include "swipt/p2.hpp"

#include <algorithm>
#include <cmath>

#include "swipt/errors.hpp"
#include "swipt/linalg.hpp"
#include "swipt/metrics.hpp"
#include "swipt/p1.hpp"

namespace swipt {

namespace {

double gamma_e_of(const SystemModel& model, double gamma_0) {
  return std::max(0.0, (1.0 + gamma_0) / std::exp2(model.r_bar0()) - 1.0);
}

double weighted_energy(const SystemModel& model, const HermitianMatrix& X) {
  double e = 0.0;
  for (int k = 0; k < model.K(); ++k) e += model.mu(k) * model.zeta() * X.quadratic_form(model.g(k));
  return e;
}

CovariancePair reconstruct_or_merge(const SystemModel& model, const CovariancePair& cov, double psd_tol) {
  try {
    return reconstruct_rank_one(cov.S, cov.Q, model.h(), psd_tol);
  } catch (const DegenerateInput&) {
    return {HermitianMatrix::Zero(model.M()), cov.Q + cov.S, std::nullopt};
  }
}

}  // namespace

EMaxResult e_max_noit(const SystemModel& model) {
  CMatrix w = CMatrix::Zero(model.M(), model.M());
  for (int k = 0; k < model.K(); ++k) w += (model.mu(k) * model.zeta()) * model.G(k).matrix();
  const auto top = linalg::max_eigpair(HermitianMatrix(w));
  EMaxResult r;
  r.psi = top.value;
  r.eta = top.vector;
  r.energy = r.psi * model.p_bar();
  r.solution.method = Method::NoIT;
  r.solution.v0 = CVector::Zero(model.M());
  r.solution.w = {std::sqrt(model.p_bar()) * top.vector};
  return r;
}

double max_ir_sinr(const SystemModel& model, double gamma_e, const SdrOptions& opts) {
  const auto r = solve_p21_sdr_new(model, gamma_e, 0.0, opts);
  if (!r.ok()) throw NumericalTrouble("max_ir_sinr: solver did not converge");
  return r.objective;
}

bool p2_feasible(const SystemModel& model, const OuterSearchConfig& cfg, const SdrOptions& opts) {
  if (model.r_bar0() <= 0.0) return true;
  const double cap = std::log2(1.0 + model.p_bar() * model.h().squaredNorm() / model.sigma0_sq());
  if (model.r_bar0() > cap) return false;
  return solve_p1_noet(model, cfg, opts).rate >= model.r_bar0() - 1e-6;
}

G2Result g2(const SystemModel& model, double gamma_0, const SdrOptions& opts, bool cross_check) {
  const double gamma_e = gamma_e_of(model, gamma_0);
  SdrSolveResult raw = solve_p21_sdr(model, gamma_0, opts);
  if (raw.status == SolveStatus::Infeasible) throw Infeasible("g2: SINR target unreachable");
  if (!raw.ok()) {
    const double reach = max_ir_sinr(model, gamma_e, opts);
    if (gamma_0 >= reach * (1.0 - 1e-6)) throw Infeasible("g2: SINR target at or beyond the reachable limit");
    throw NumericalTrouble("g2: solver did not converge");
  }
  G2Result out;
  const HermitianMatrix& S = raw.primal.S;
  const HermitianMatrix& Q = raw.primal.Q;
  out.raw_rank_S = linalg::numerical_rank(S, opts.rank_tol, S.trace() + Q.trace());
  out.solution = reconstruct_or_merge(model, raw.primal, opts.psd_tol);
  out.value = weighted_energy(model, out.solution.S + out.solution.Q);
  out.objective_change = std::abs(out.value - raw.objective) / std::max(std::abs(raw.objective), 1e-300);

  const auto& sol = out.solution;
  double viol = (sol.S.trace() + sol.Q.trace() - model.p_bar()) / model.p_bar();
  if (gamma_0 > 0.0) {
    const double need = gamma_0 * (sol.Q.quadratic_form(model.h()) + model.sigma0_sq());
    viol = std::max(viol, (need - sol.S.quadratic_form(model.h())) / need);
  }
  if (gamma_e > 0.0) {
    for (int k = 0; k < model.K(); ++k) {
      const double cap = gamma_e * (sol.Q.quadratic_form(model.g(k)) + model.sigma_sq(k));
      viol = std::max(viol, (sol.S.quadratic_form(model.g(k)) - cap) / cap);
    }
  }
  out.max_violation = std::max(viol, 0.0);

  if (cross_check && raw.objective > 0.0) {
    const auto chk = solve_p21_sdr_new(model, gamma_e, raw.objective * (1.0 - 1e-7), opts);
    if (chk.ok()) out.cross_check_sinr = chk.objective;
  }
  out.raw = std::move(raw);
  return out;
}

std::pair<double, double> p2_gamma_interval(const SystemModel& model) {
  return {std::exp2(model.r_bar0()) - 1.0, model.p_bar() * model.h().squaredNorm() / model.sigma0_sq()};
}

P2Result solve_p2(const SystemModel& model, const OuterSearchConfig& cfg, const SdrOptions& opts) {
  auto [lo, hi] = p2_gamma_interval(model);
  if (cfg.gamma_hi > cfg.gamma_lo && cfg.gamma_lo >= 0.0) {
    lo = std::max(lo, cfg.gamma_lo);
    hi = std::min(hi, cfg.gamma_hi);
  }
  if (!(hi > lo)) throw Infeasible("solve_p2: rate target exceeds the interference-free capacity");
  auto f = [&](double gamma_0) -> std::optional<double> {
    try {
      return g2(model, gamma_0, opts).value;
    } catch (const Infeasible&) {
      return std::nullopt;
    } catch (const NumericalTrouble&) {
      return std::nullopt;
    }
  };
  const OuterSearchResult search = maximize_1d(f, lo, hi, cfg);

  P2Result out;
  out.gamma_0_star = search.gamma_star;
  out.boundary = search.boundary;
  out.curve = search.grid;
  out.inner = g2(model, search.gamma_star, opts);
  out.solution = beams_from_covariances(out.inner.solution, Method::P2Optimal);
  out.energy = evaluate(model, out.solution).weighted_energy;
  return out;
}

P2Result solve_p2_nosc(const SystemModel& model, double r_tilde0, const SdrOptions& opts) {
  if (!(r_tilde0 >= 0.0)) throw InvalidArgument("solve_p2_nosc: rate must be nonnegative");
  const double gamma_0 = std::exp2(r_tilde0) - 1.0;
  const double limit = model.p_bar() * model.h().squaredNorm() / model.sigma0_sq();
  if (gamma_0 > limit) throw Infeasible("solve_p2_nosc: rate exceeds the interference-free capacity");
  SdrSolveResult raw = solve_p2_nosc_sdr(model, gamma_0, opts);
  if (raw.status == SolveStatus::Infeasible) throw Infeasible("solve_p2_nosc: relaxed problem infeasible");
  if (!raw.ok()) throw NumericalTrouble("solve_p2_nosc: solver did not converge");

  P2Result out;
  out.gamma_0_star = gamma_0;
  const HermitianMatrix& S = raw.primal.S;
  const HermitianMatrix& Q = raw.primal.Q;
  out.inner.raw_rank_S = linalg::numerical_rank(S, opts.rank_tol, S.trace() + Q.trace());
  // Moving Q into S keeps every constraint and the energy, so the relaxed
  // optimum is merged and reduced to rank one keeping Tr(H X), Tr(X) and the
  // weighted energy.
  HermitianMatrix W = HermitianMatrix::Zero(model.M());
  for (int k = 0; k < model.K(); ++k) W = W + model.G(k) * (model.mu(k) * model.zeta());
  out.inner.solution.S = reduce_rank(S + Q, {model.H(), HermitianMatrix::Identity(model.M()), W}, opts.rank_tol);
  out.inner.solution.Q = HermitianMatrix::Zero(model.M());
  out.inner.value = weighted_energy(model, out.inner.solution.S + out.inner.solution.Q);
  out.inner.raw = std::move(raw);
  out.solution = beams_from_covariances(out.inner.solution, Method::NoSC);
  out.energy = evaluate(model, out.solution).weighted_energy;
  return out;
}

}  // namespace swipt
