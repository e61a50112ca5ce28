#include "swipt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swipt/errors.hpp"

namespace swipt {

double MetricsReport::min_energy() const {
  if (energy.empty()) return 0.0;
  return *std::min_element(energy.begin(), energy.end());
}

namespace {

// Builds the report from received signal and interference powers.
MetricsReport assemble(const SystemModel& model, double sig0, double int0, const std::vector<double>& sig,
                       const std::vector<double>& inter, double power) {
  MetricsReport r;
  r.sinr0 = sig0 / (int0 + model.sigma0_sq());
  r.raw_rate = std::numeric_limits<double>::infinity();
  for (int k = 0; k < model.K(); ++k) {
    const auto kk = static_cast<size_t>(k);
    const double s = sig[kk] / (inter[kk] + model.sigma_sq(k));
    r.sinr.push_back(s);
    r.raw_rate = std::min(r.raw_rate, std::log2((1.0 + r.sinr0) / (1.0 + s)));
    const double e = model.zeta() * (sig[kk] + inter[kk]);
    r.energy.push_back(e);
    r.weighted_energy += model.mu(k) * e;
  }
  r.secrecy_rate = std::max(0.0, r.raw_rate);
  r.sum_power = power;
  if (power > model.p_bar() * (1.0 + Tolerances::kFeas)) r.violations.push_back({"power", power - model.p_bar()});
  return r;
}

}  // namespace

MetricsReport evaluate(const SystemModel& model, const BeamformingSolution& sol) {
  const int M = model.M();
  if (sol.v0.size() != M) throw DimensionMismatch("evaluate: v0 length differs from M");
  for (const auto& w : sol.w) {
    if (w.size() != M) throw DimensionMismatch("evaluate: energy beam length differs from M");
  }
  const double sig0 = std::norm(sol.v0.dot(model.h()));
  double int0 = 0.0;
  for (const auto& w : sol.w) int0 += std::norm(w.dot(model.h()));
  std::vector<double> sig, inter;
  for (int k = 0; k < model.K(); ++k) {
    sig.push_back(std::norm(sol.v0.dot(model.g(k))));
    double i = 0.0;
    for (const auto& w : sol.w) i += std::norm(w.dot(model.g(k)));
    inter.push_back(i);
  }
  return assemble(model, sig0, int0, sig, inter, sol.sum_power());
}

MetricsReport evaluate(const SystemModel& model, const CovariancePair& cov) {
  if (cov.S.dim() != model.M() || cov.Q.dim() != model.M()) {
    throw DimensionMismatch("evaluate: covariance size differs from M");
  }
  std::vector<double> sig, inter;
  for (int k = 0; k < model.K(); ++k) {
    sig.push_back(cov.S.quadratic_form(model.g(k)));
    inter.push_back(cov.Q.quadratic_form(model.g(k)));
  }
  return assemble(model, cov.S.quadratic_form(model.h()), cov.Q.quadratic_form(model.h()), sig, inter,
                  cov.S.trace() + cov.Q.trace());
}

std::vector<Violation> check_constraints(const SystemModel& model, const BeamformingSolution& sol, Problem problem,
                                         double feas_tol, double rate_tol) {
  const MetricsReport r = evaluate(model, sol);
  std::vector<Violation> out;
  if (r.sum_power > model.p_bar() * (1.0 + feas_tol)) out.push_back({"power", r.sum_power - model.p_bar()});
  if (problem == Problem::P1) {
    for (int k = 0; k < model.K(); ++k) {
      const double e = r.energy[static_cast<size_t>(k)];
      if (e < model.e_bar(k) * (1.0 - feas_tol)) out.push_back({"energy_" + std::to_string(k), model.e_bar(k) - e});
    }
  } else if (r.secrecy_rate < model.r_bar0() - rate_tol) {
    out.push_back({"rate", model.r_bar0() - r.secrecy_rate});
  }
  return out;
}

}  // namespace swipt
