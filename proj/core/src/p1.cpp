#include "swipt/p1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swipt/errors.hpp"
#include "swipt/linalg.hpp"
#include "swipt/metrics.hpp"

namespace swipt {

namespace {

void throw_on_failure(const SdrSolveResult& r, const std::string& what) {
  switch (r.status) {
    case SolveStatus::Optimal: return;
    case SolveStatus::Infeasible: throw Infeasible(what + ": relaxed problem infeasible");
    case SolveStatus::Unbounded: throw NumericalTrouble(what + ": relaxed problem reported unbounded");
    case SolveStatus::NumericalTrouble: throw NumericalTrouble(what + ": solver did not converge");
  }
}

// Reconstructs a rank-one information covariance from a Charnes-Cooper
// solution and maps it back to physical covariances.
G1Result finish_cc(const SystemModel& model, SdrSolveResult raw, std::optional<double> gamma_e,
                   const SdrOptions& opts) {
  G1Result out;
  const double t = raw.primal.t.value_or(0.0);
  if (!(t > 0.0)) throw NumericalTrouble("Charnes-Cooper solution has nonpositive t");
  const HermitianMatrix& S = raw.primal.S;
  const HermitianMatrix& Q = raw.primal.Q;
  out.raw_rank_S = linalg::numerical_rank(S, opts.rank_tol, S.trace() + Q.trace());
  CovariancePair rec;
  try {
    rec = reconstruct_rank_one(S, Q, model.h(), opts.psd_tol);
  } catch (const DegenerateInput&) {
    out.degenerate = true;
    rec.S = HermitianMatrix::Zero(model.M());
    rec.Q = Q + S;
  }
  out.solution.S = rec.S * (1.0 / t);
  out.solution.Q = rec.Q * (1.0 / t);
  const double hs = out.solution.S.quadratic_form(model.h());
  const double hq = out.solution.Q.quadratic_form(model.h());
  out.value = std::max(hs, 0.0) / (std::max(hq, 0.0) + model.sigma0_sq());

  double viol = (out.solution.S.trace() + out.solution.Q.trace() - model.p_bar()) / model.p_bar();
  for (int k = 0; k < model.K(); ++k) {
    const double gs = out.solution.S.quadratic_form(model.g(k));
    const double gq = out.solution.Q.quadratic_form(model.g(k));
    if (model.e_bar(k) > 0.0) {
      viol = std::max(viol, (model.e_bar(k) - model.zeta() * (gs + gq)) / model.e_bar(k));
    }
    if (gamma_e) {
      const double cap = *gamma_e * (gq + model.sigma_sq(k));
      viol = std::max(viol, (gs - cap) / cap);
    }
  }
  out.max_violation = std::max(viol, 0.0);
  out.raw = std::move(raw);
  return out;
}

}  // namespace

std::vector<CVector> energy_beams(const HermitianMatrix& Q, double rel_tol, double reference) {
  std::vector<CVector> beams;
  if (Q.dim() == 0) return beams;
  const auto es = linalg::hermitian_evd(Q);
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    if (es.values(i) > rel_tol * reference && es.values(i) > 0.0) {
      beams.emplace_back(std::sqrt(es.values(i)) * es.vectors.col(i));
    }
  }
  return beams;
}

BeamformingSolution beams_from_covariances(const CovariancePair& cov, Method method) {
  BeamformingSolution sol;
  sol.method = method;
  const double reference = std::max(cov.S.trace(), 0.0) + std::max(cov.Q.trace(), 0.0);
  const auto es = linalg::hermitian_evd(cov.S);
  sol.v0 = std::sqrt(std::max(es.values(0), 0.0)) * es.vectors.col(0);
  sol.w = energy_beams(cov.Q, 1e-12, reference);
  return sol;
}

bool p1_feasible(const SystemModel& model, const SdrOptions& opts) {
  const auto r = solve_p1_noit(model, opts);
  if (r.status == SolveStatus::NumericalTrouble || r.status == SolveStatus::Unbounded) {
    throw NumericalTrouble("p1_feasible: minimum-power problem did not converge");
  }
  return r.ok();
}

G1Result g1(const SystemModel& model, double gamma_e, const SdrOptions& opts) {
  SdrSolveResult raw = solve_p11_sdr_eqv(model, gamma_e, opts);
  throw_on_failure(raw, "g1");
  return finish_cc(model, std::move(raw), gamma_e, opts);
}

std::pair<double, double> p1_gamma_interval(const SystemModel& model) {
  double hi = 0.0;
  for (int k = 0; k < model.K(); ++k) {
    hi = std::max(hi, model.p_bar() * model.g(k).squaredNorm() / model.sigma_sq(k));
  }
  const double lo = 1e-4;
  return {lo, std::max(hi, 10.0 * lo)};
}

P1Result solve_p1(const SystemModel& model, const OuterSearchConfig& cfg, const SdrOptions& opts) {
  if (!p1_feasible(model, opts)) throw Infeasible("solve_p1: energy targets exceed the power budget");
  auto [lo, hi] = p1_gamma_interval(model);
  if (cfg.gamma_hi > cfg.gamma_lo && cfg.gamma_lo > 0.0) {
    lo = cfg.gamma_lo;
    hi = cfg.gamma_hi;
  }
  auto f = [&](double gamma) -> std::optional<double> {
    try {
      const G1Result r = g1(model, gamma, opts);
      return std::log2((1.0 + r.value) / (1.0 + gamma));
    } catch (const Infeasible&) {
      return std::nullopt;
    } catch (const NumericalTrouble&) {
      return std::nullopt;
    }
  };
  const OuterSearchResult search = maximize_1d(f, lo, hi, cfg);

  P1Result out;
  out.gamma_e_star = search.gamma_star;
  out.outer_value = search.value;
  out.boundary = search.boundary;
  out.curve = search.grid;
  out.inner = g1(model, search.gamma_star, opts);
  out.solution = beams_from_covariances(out.inner.solution, Method::P1Optimal);
  out.rate = evaluate(model, out.solution).secrecy_rate;
  return out;
}

P1Result solve_p1_noet(const SystemModel& model, const OuterSearchConfig& cfg, const SdrOptions& opts) {
  P1Result r = solve_p1(model.with_uniform_energy_target(0.0), cfg, opts);
  r.solution.method = Method::NoET;
  return r;
}

P1Result solve_p1_nosc(const SystemModel& model, const SdrOptions& opts) {
  if (!p1_feasible(model, opts)) throw Infeasible("solve_p1_nosc: energy targets exceed the power budget");
  SdrSolveResult raw = solve_p1_nosc_sdr(model, opts);
  throw_on_failure(raw, "solve_p1_nosc");
  P1Result out;
  out.inner = finish_cc(model, std::move(raw), std::nullopt, opts);
  out.solution = beams_from_covariances(out.inner.solution, Method::NoSC);
  out.rate = std::log2(1.0 + evaluate(model, out.solution).sinr0);
  out.outer_value = std::log2(1.0 + out.inner.value);
  out.gamma_e_star = std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace swipt
