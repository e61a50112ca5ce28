#include "swipt/suboptimal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "swipt/errors.hpp"
#include "swipt/linalg.hpp"
#include "swipt/metrics.hpp"
#include "swipt/p1.hpp"

namespace swipt {

namespace {

struct InfoNullBeam {
  CMatrix V;       // orthonormal basis of the null space of the ER channels
  double gain = 0.0;  // |V^H h|^2
  CVector direction;  // unit vector V V^H h / |V^H h|
};

InfoNullBeam info_null_beam(const SystemModel& model) {
  if (model.K() >= model.M()) {
    throw NullSpaceUnavailable("null-space information beam needs fewer ERs than antennas");
  }
  InfoNullBeam b;
  b.V = linalg::null_space(model.ER_matrix()).columns;
  const CVector vh = b.V.adjoint() * model.h();
  b.gain = vh.squaredNorm();
  if (b.gain > 0.0) b.direction = b.V * vh / std::sqrt(b.gain);
  return b;
}

std::vector<HermitianMatrix> reduced_channels(const SystemModel& model, const CMatrix& X) {
  std::vector<HermitianMatrix> out;
  for (int k = 0; k < model.K(); ++k) out.emplace_back(CMatrix(X.adjoint() * model.G(k).matrix() * X));
  return out;
}

// Minimum-power energy covariance restricted to the null space of h, kept in
// the reduced coordinates of the basis X.
struct EnergyShape {
  CMatrix X;
  HermitianMatrix Q_reduced;

  double power() const { return Q_reduced.trace(); }
  HermitianMatrix full() const { return HermitianMatrix(CMatrix(X * Q_reduced.matrix() * X.adjoint())); }
  std::vector<CVector> beams(double reference) const {
    std::vector<CVector> out;
    for (const CVector& w : energy_beams(Q_reduced, 1e-12, reference)) out.emplace_back(X * w);
    return out;
  }
};

EnergyShape min_power_energy_shape(const SystemModel& model, const SdrOptions& opts) {
  const CMatrix X = linalg::orth_complement_of_vector(model.h()).columns;
  const auto g_tilde = reduced_channels(model, X);
  for (int k = 0; k < model.K(); ++k) {
    if (model.e_bar(k) > 0.0 && g_tilde[static_cast<size_t>(k)].trace() <= 1e-14 * model.g(k).squaredNorm()) {
      throw Infeasible("ER channel lies along h; energy beams orthogonal to h cannot reach it");
    }
  }
  const SdrSolveResult r = solve_p1_sub1_sdp(model, g_tilde, opts);
  if (r.status == SolveStatus::Infeasible) throw Infeasible("minimum-power energy covariance infeasible");
  if (!r.ok()) throw NumericalTrouble("minimum-power energy covariance: solver did not converge");
  return {X, r.primal.Q};
}

double secrecy_rate_along_h(const SystemModel& model, double p0, const std::vector<double>& a,
                            const std::vector<double>& c) {
  const double r_ir = std::log2(1.0 + p0 * model.h().squaredNorm() / model.sigma0_sq());
  double worst = r_ir;
  for (int k = 0; k < model.K(); ++k) {
    const auto kk = static_cast<size_t>(k);
    const double sinr = p0 * a[kk] / ((model.p_bar() - p0) * c[kk] + model.sigma_sq(k));
    worst = std::min(worst, r_ir - std::log2(1.0 + sinr));
  }
  return worst;
}

std::vector<double> info_coupling(const SystemModel& model) {
  std::vector<double> a;
  const double hn = model.h().squaredNorm();
  for (int k = 0; k < model.K(); ++k) a.push_back(std::norm(model.h().dot(model.g(k))) / hn);
  return a;
}

double golden_max(const std::function<double(double)>& f, double a, double b, int iters) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

}  // namespace

SuboptimalResult p1_sub1(const SystemModel& model, const SdrOptions& opts) {
  const InfoNullBeam info = info_null_beam(model);
  if (!(info.gain > 0.0)) throw DegenerateInput("p1_sub1: h lies in the span of the ER channels");
  const EnergyShape shape = min_power_energy_shape(model, opts);
  SuboptimalResult out;
  out.p0 = model.p_bar() - shape.power();
  if (!(out.p0 > 0.0)) throw Infeasible("p1_sub1: energy beams consume the whole power budget");
  out.solution.method = Method::Sub1;
  out.solution.v0 = std::sqrt(out.p0) * info.direction;
  out.solution.w = shape.beams(model.p_bar());
  out.value = evaluate(model, out.solution).secrecy_rate;
  return out;
}

SuboptimalResult p1_sub2(const SystemModel& model, const PowerSearchConfig& cfg, const SdrOptions& opts) {
  if (cfg.grid_points < 2) throw InvalidArgument("p1_sub2: need at least 2 grid points");
  const EnergyShape shape = min_power_energy_shape(model, opts);
  const HermitianMatrix Q = shape.full();
  const double q_power = shape.power();
  if (!(q_power < model.p_bar())) throw Infeasible("p1_sub2: energy beam shape does not fit the power budget");

  const std::vector<double> a = info_coupling(model);
  std::vector<double> c(static_cast<size_t>(model.K()), 0.0);
  if (q_power > 0.0) {
    for (int k = 0; k < model.K(); ++k) c[static_cast<size_t>(k)] = Q.quadratic_form(model.g(k)) / q_power;
  }

  // Harvested energy is affine in the information power, so the feasible
  // set is an interval.
  double lo = 0.0, hi = model.p_bar();
  for (int k = 0; k < model.K(); ++k) {
    const auto kk = static_cast<size_t>(k);
    const double need = model.e_bar(k) / model.zeta();
    if (need <= 0.0) continue;
    const double slope = a[kk] - c[kk];
    const double rhs = need - model.p_bar() * c[kk];
    if (slope > 0.0) {
      lo = std::max(lo, rhs / slope);
    } else if (slope < 0.0) {
      hi = std::min(hi, rhs / slope);
    } else if (rhs > 0.0) {
      hi = -1.0;
    }
  }
  if (!(hi > 0.0) || hi < lo) throw EmptyFeasibleSet("p1_sub2: no information power meets the energy targets");

  auto rate = [&](double p) { return secrecy_rate_along_h(model, p, a, c); };
  const int n = cfg.grid_points;
  const double start = lo > 0.0 ? lo : hi / n;
  const double step = (hi - start) / (n - 1);
  int best = 0;
  double best_val = rate(start);
  for (int i = 1; i < n; ++i) {
    const double v = rate(start + step * i);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double p0 = start + step * best;
  if (step > 0.0) {
    const double pa = start + step * std::max(best - 1, 0);
    const double pb = start + step * std::min(best + 1, n - 1);
    const double refined = golden_max(rate, pa, pb, 60);
    if (rate(refined) > best_val) p0 = refined;
  }

  SuboptimalResult out;
  out.p0 = p0;
  out.p0_min = start;
  out.p0_max = hi;
  out.solution.method = Method::Sub2;
  out.solution.v0 = std::sqrt(p0) * model.h() / model.h().norm();
  if (q_power > 0.0) {
    for (const CVector& w : shape.beams(model.p_bar())) {
      out.solution.w.emplace_back(std::sqrt((model.p_bar() - p0) / q_power) * w);
    }
  }
  out.value = evaluate(model, out.solution).secrecy_rate;
  return out;
}

double p2_sub1_info_power(const SystemModel& model) {
  const InfoNullBeam info = info_null_beam(model);
  const double need = (std::exp2(model.r_bar0()) - 1.0) * model.sigma0_sq();
  if (need <= 0.0) return 0.0;
  if (!(info.gain > 0.0)) throw PowerDeficit("p2_sub1: h lies in the span of the ER channels");
  return need / info.gain;
}

SuboptimalResult p2_sub1(const SystemModel& model) {
  const InfoNullBeam info = info_null_beam(model);
  SuboptimalResult out;
  out.p0 = p2_sub1_info_power(model);
  if (out.p0 > model.p_bar()) throw PowerDeficit("p2_sub1: rate target needs more than the power budget");

  const CMatrix X = linalg::orth_complement_of_vector(model.h()).columns;
  CMatrix w = CMatrix::Zero(X.cols(), X.cols());
  const auto g_tilde = reduced_channels(model, X);
  for (int k = 0; k < model.K(); ++k) w += (model.mu(k) * model.zeta()) * g_tilde[static_cast<size_t>(k)].matrix();
  const auto top = linalg::max_eigpair(HermitianMatrix(w));

  out.solution.method = Method::Sub1;
  out.solution.v0 = out.p0 > 0.0 ? CVector(std::sqrt(out.p0) * info.direction) : CVector(CVector::Zero(model.M()));
  const double rest = model.p_bar() - out.p0;
  if (rest > 0.0) out.solution.w.emplace_back(std::sqrt(rest) * X * top.vector);
  out.value = evaluate(model, out.solution).weighted_energy;
  return out;
}

SuboptimalResult p2_sub2(const SystemModel& model, const PowerSearchConfig& cfg) {
  if (cfg.grid_points < 2) throw InvalidArgument("p2_sub2: need at least 2 grid points");
  const double tol = cfg.bisection_tol > 0.0 ? cfg.bisection_tol : 1e-9 * model.p_bar();
  const CMatrix X = linalg::orth_complement_of_vector(model.h()).columns;
  CMatrix wsum = CMatrix::Zero(X.cols(), X.cols());
  const auto g_tilde = reduced_channels(model, X);
  for (int k = 0; k < model.K(); ++k) {
    wsum += (model.mu(k) * model.zeta()) * g_tilde[static_cast<size_t>(k)].matrix();
  }
  const CVector beam = X * linalg::max_eigpair(HermitianMatrix(wsum)).vector;

  const std::vector<double> a = info_coupling(model);
  std::vector<double> c;
  double info_weight = 0.0, energy_weight = 0.0;
  for (int k = 0; k < model.K(); ++k) {
    c.push_back(std::norm(beam.dot(model.g(k))));
    info_weight += model.mu(k) * a[static_cast<size_t>(k)];
    energy_weight += model.mu(k) * c.back();
  }

  const double p_bar = model.p_bar();
  const double r_bar = model.r_bar0();
  auto feasible = [&](double p) { return std::max(secrecy_rate_along_h(model, p, a, c), 0.0) >= r_bar; };

  double p_min = 0.0, p_max = p_bar;
  if (r_bar > 0.0) {
    const int n = cfg.grid_points;
    auto at = [&](int i) { return p_bar * i / n; };
    int first = -1, last = -1;
    for (int i = 1; i <= n; ++i) {
      if (feasible(at(i))) {
        if (first < 0) first = i;
        last = i;
      }
    }
    if (first < 0) throw EmptyFeasibleSet("p2_sub2: no information power meets the rate target");
    // Bisect each boundary, keeping the feasible end.
    double bad = at(first - 1), good = at(first);
    while (good - bad > tol) {
      const double mid = 0.5 * (bad + good);
      (feasible(mid) ? good : bad) = mid;
    }
    p_min = good;
    if (last < n) {
      good = at(last);
      bad = at(last + 1);
      while (bad - good > tol) {
        const double mid = 0.5 * (bad + good);
        (feasible(mid) ? good : bad) = mid;
      }
      p_max = good;
    }
  }

  SuboptimalResult out;
  out.p0_min = p_min;
  out.p0_max = p_max;
  out.p0 = info_weight >= energy_weight ? p_max : p_min;
  out.solution.method = Method::Sub2;
  out.solution.v0 = std::sqrt(out.p0) * model.h() / model.h().norm();
  const double rest = p_bar - out.p0;
  if (rest > 0.0) out.solution.w.emplace_back(std::sqrt(rest) * beam);
  out.value = evaluate(model, out.solution).weighted_energy;
  return out;
}

}  // namespace swipt
