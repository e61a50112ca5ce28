#include "swipt/sdr.hpp"

#include <algorithm>
#include <cmath>

#include "swipt/errors.hpp"
#include "swipt/linalg.hpp"

namespace swipt {

namespace {

using Rel = ConicSdp::Relation;
using Sense = ConicSdp::Sense;

// Problems are built in normalized units: channel outer products are scaled
// by P / sigma^2 so that every coefficient is an SNR at full power.
struct Normalized {
  HermitianMatrix Hn;
  std::vector<HermitianMatrix> Gn;
};

Normalized normalize(const SystemModel& m) {
  Normalized n;
  n.Hn = m.H() * (m.p_bar() / m.sigma0_sq());
  for (int k = 0; k < m.K(); ++k) n.Gn.push_back(m.G(k) * (m.p_bar() / m.sigma_sq(k)));
  return n;
}

const ConicSolver& solver_of(const SdrOptions& opts) {
  return opts.solver ? *opts.solver : default_solver();
}

ConicSolution run(const ConicSdp& sdp, const std::string& name, const SdrOptions& opts) {
  if (opts.on_build) opts.on_build(name, sdp);
  return solver_of(opts).solve(sdp);
}

void copy_diagnostics(const ConicSolution& cs, SdrSolveResult& r) {
  r.status = cs.status;
  r.primal_residual = cs.primal_residual;
  r.dual_residual = cs.dual_residual;
  r.iterations = cs.iterations;
  r.multipliers = cs.duals;
}

// Variable for the information covariance, optionally restricted to
// S = N S_tilde N^H. Absent when the restriction leaves no room.
struct InfoVar {
  int index = -1;
  std::optional<CMatrix> basis;

  bool present() const { return index >= 0; }
  HermitianMatrix coeff(const HermitianMatrix& a) const {
    if (!basis) return a;
    return HermitianMatrix(CMatrix(basis->adjoint() * a.matrix() * *basis));
  }
  HermitianMatrix expand(const HermitianMatrix& s, Eigen::Index m) const {
    if (!present()) return HermitianMatrix::Zero(m);
    if (!basis) return s;
    return HermitianMatrix(CMatrix(*basis * s.matrix() * basis->adjoint()));
  }
};

InfoVar add_info_var(ConicSdp& sdp, const SystemModel& model, bool restrict_to_er_null_space) {
  InfoVar v;
  if (!restrict_to_er_null_space) {
    v.index = sdp.add_psd_variable(model.M(), "S");
    return v;
  }
  try {
    const auto ns = linalg::null_space(model.ER_matrix());
    v.basis = ns.columns;
    v.index = sdp.add_psd_variable(static_cast<int>(ns.size()), "S_null");
  } catch (const EmptyNullSpace&) {
  }
  return v;
}

bool is_zero_cap(double gamma_e, double gamma_0) { return std::abs(gamma_e) <= 1e-12 * (1.0 + gamma_0); }

double gamma_e_of(const SystemModel& model, double gamma_0) {
  return (1.0 + gamma_0) / std::exp2(model.r_bar0()) - 1.0;
}

enum class EnergyRows { PerEr, WeightedFloor };

// Charnes-Cooper form shared by the P1 inner problem and its P2 counterpart.
SdrSolveResult solve_cc(const SystemModel& model, std::optional<double> gamma_e, EnergyRows energy,
                        double e_star, const std::string& name, const SdrOptions& opts) {
  const int M = model.M();
  const int K = model.K();
  const Normalized n = normalize(model);
  const bool zero_cap = gamma_e && is_zero_cap(*gamma_e, 0.0);
  if (gamma_e && *gamma_e < 0.0 && !zero_cap) throw InvalidArgument(name + ": gamma_e must be nonnegative");

  ConicSdp sdp;
  const InfoVar s = add_info_var(sdp, model, zero_cap);
  const int q = sdp.add_psd_variable(M, "Q");
  const int t = sdp.add_scalar_variable("t");
  const HermitianMatrix I = HermitianMatrix::Identity(M);

  LinearExpr obj;
  if (s.present()) obj.add(s.index, s.coeff(n.Hn));
  sdp.set_objective(Sense::Maximize, obj);

  const int row_norm = sdp.add_constraint(LinearExpr().add(q, n.Hn).add_scalar(t, 1.0), Rel::Eq, 1.0, "normalization");
  std::vector<int> row_cap(static_cast<size_t>(K), -1);
  if (gamma_e && !zero_cap && s.present()) {
    for (int k = 0; k < K; ++k) {
      LinearExpr e;
      e.add(s.index, s.coeff(n.Gn[k])).add(q, n.Gn[k] * (-*gamma_e)).add_scalar(t, -*gamma_e);
      row_cap[k] = sdp.add_constraint(std::move(e), Rel::Le, 0.0, "eavesdrop_" + std::to_string(k));
    }
  }
  std::vector<int> row_energy;
  if (energy == EnergyRows::PerEr) {
    for (int k = 0; k < K; ++k) {
      const double e_norm = model.e_bar(k) / (model.zeta() * model.sigma_sq(k));
      LinearExpr e;
      if (s.present()) e.add(s.index, s.coeff(n.Gn[k]));
      e.add(q, n.Gn[k]).add_scalar(t, -e_norm);
      row_energy.push_back(sdp.add_constraint(std::move(e), Rel::Ge, 0.0, "energy_" + std::to_string(k)));
    }
  } else if (e_star > 0.0) {
    CMatrix w = CMatrix::Zero(M, M);
    for (int k = 0; k < K; ++k) w += (model.mu(k) * model.zeta() * model.sigma_sq(k)) * n.Gn[k].matrix();
    const HermitianMatrix W(w);
    LinearExpr e;
    if (s.present()) e.add(s.index, s.coeff(W));
    e.add(q, W).add_scalar(t, -e_star);
    row_energy.push_back(sdp.add_constraint(std::move(e), Rel::Ge, 0.0, "weighted_energy"));
  }
  LinearExpr pw;
  if (s.present()) pw.add(s.index, s.coeff(I));
  pw.add(q, I).add_scalar(t, -1.0);
  const int row_power = sdp.add_constraint(std::move(pw), Rel::Le, 0.0, "power");

  const ConicSolution cs = run(sdp, name, opts);
  SdrSolveResult r;
  copy_diagnostics(cs, r);
  if (!r.ok()) return r;

  const double scale = model.p_bar() / model.sigma0_sq();
  r.primal.S = s.expand(s.present() ? cs.psd[static_cast<size_t>(s.index)] : HermitianMatrix(), M) * scale;
  r.primal.Q = cs.psd[static_cast<size_t>(q)] * scale;
  r.primal.t = cs.scalars[static_cast<size_t>(t)] / model.sigma0_sq();
  r.objective = cs.objective;

  if (energy == EnergyRows::PerEr) {
    DualCertificate d;
    const double s0 = model.sigma0_sq();
    d.lambda = cs.duals[static_cast<size_t>(row_norm)];
    for (int k = 0; k < K; ++k) {
      const double b = row_cap[k] >= 0 ? cs.duals[static_cast<size_t>(row_cap[k])] : 0.0;
      d.beta.push_back(b * s0 / model.sigma_sq(k));
      d.alpha.push_back(cs.duals[static_cast<size_t>(row_energy[k])] * s0 /
                        (model.zeta() * model.sigma_sq(k)));
    }
    d.theta = cs.duals[static_cast<size_t>(row_power)] * s0 / model.p_bar();
    r.duals = d;
  }
  return r;
}

SdrSolveResult solve_p21(const SystemModel& model, double gamma_0, bool with_caps, const std::string& name,
                         const SdrOptions& opts) {
  if (!(gamma_0 >= 0.0)) throw InvalidArgument(name + ": gamma_0 must be nonnegative");
  const int M = model.M();
  const int K = model.K();
  const Normalized n = normalize(model);
  const double gamma_e = gamma_e_of(model, gamma_0);
  const bool zero_cap = with_caps && is_zero_cap(gamma_e, gamma_0);
  if (with_caps && gamma_e < 0.0 && !zero_cap) {
    throw InvalidArgument(name + ": gamma_0 below 2^r_bar0 - 1");
  }

  ConicSdp sdp;
  const InfoVar s = add_info_var(sdp, model, zero_cap);
  const int q = sdp.add_psd_variable(M, "Q");
  const HermitianMatrix I = HermitianMatrix::Identity(M);

  CMatrix w = CMatrix::Zero(M, M);
  for (int k = 0; k < K; ++k) w += (model.mu(k) * model.zeta() * model.sigma_sq(k)) * n.Gn[k].matrix();
  const HermitianMatrix W(w);
  LinearExpr obj;
  if (s.present()) obj.add(s.index, s.coeff(W));
  obj.add(q, W);
  sdp.set_objective(Sense::Maximize, obj);

  SdrSolveResult r;
  if (!s.present() && gamma_0 > 0.0) {
    r.status = SolveStatus::Infeasible;
    return r;
  }
  if (s.present()) {
    LinearExpr e;
    e.add(s.index, s.coeff(n.Hn));
    if (gamma_0 > 0.0) e.add(q, n.Hn * (-gamma_0));
    sdp.add_constraint(std::move(e), Rel::Ge, gamma_0, "ir_sinr");
  }
  if (with_caps && !zero_cap && s.present()) {
    for (int k = 0; k < K; ++k) {
      LinearExpr e;
      e.add(s.index, s.coeff(n.Gn[k])).add(q, n.Gn[k] * (-gamma_e));
      sdp.add_constraint(std::move(e), Rel::Le, gamma_e, "eavesdrop_" + std::to_string(k));
    }
  }
  LinearExpr pw;
  if (s.present()) pw.add(s.index, s.coeff(I));
  pw.add(q, I);
  sdp.add_constraint(std::move(pw), Rel::Le, 1.0, "power");

  const ConicSolution cs = run(sdp, name, opts);
  copy_diagnostics(cs, r);
  if (!r.ok()) return r;
  r.primal.S = s.expand(s.present() ? cs.psd[static_cast<size_t>(s.index)] : HermitianMatrix(), M) * model.p_bar();
  r.primal.Q = cs.psd[static_cast<size_t>(q)] * model.p_bar();
  r.objective = cs.objective;
  return r;
}

SdrSolveResult solve_min_power(const std::vector<HermitianMatrix>& gn, const std::vector<double>& e_norm,
                               double p_bar, const std::string& name, const SdrOptions& opts) {
  const int dim = gn.empty() ? 0 : static_cast<int>(gn.front().dim());
  SdrSolveResult r;
  bool any = false;
  for (double e : e_norm) any = any || e > 0.0;
  if (!any) {
    r.status = SolveStatus::Optimal;
    r.primal.S = HermitianMatrix::Zero(dim);
    r.primal.Q = HermitianMatrix::Zero(dim);
    r.objective = 0.0;
    return r;
  }
  ConicSdp sdp;
  const int q = sdp.add_psd_variable(dim, "Q");
  sdp.set_objective(Sense::Minimize, LinearExpr().add(q, HermitianMatrix::Identity(dim)));
  for (size_t k = 0; k < gn.size(); ++k) {
    if (e_norm[k] <= 0.0) continue;
    sdp.add_constraint(LinearExpr().add(q, gn[k]), Rel::Ge, e_norm[k], "energy_" + std::to_string(k));
  }
  const ConicSolution cs = run(sdp, name, opts);
  copy_diagnostics(cs, r);
  if (!r.ok()) return r;
  r.primal.S = HermitianMatrix::Zero(dim);
  r.primal.Q = cs.psd[static_cast<size_t>(q)] * p_bar;
  r.objective = cs.objective * p_bar;
  return r;
}

}  // namespace

SdrSolveResult solve_p1_noit(const SystemModel& model, const SdrOptions& opts) {
  const Normalized n = normalize(model);
  std::vector<double> e_norm;
  for (int k = 0; k < model.K(); ++k) e_norm.push_back(model.e_bar(k) / (model.zeta() * model.sigma_sq(k)));
  SdrSolveResult r = solve_min_power(n.Gn, e_norm, model.p_bar(), "p1_noit", opts);
  if (r.ok() && r.objective > model.p_bar() * (1.0 + opts.feas_tol)) r.status = SolveStatus::Infeasible;
  return r;
}

SdrSolveResult solve_p11_sdr_eqv(const SystemModel& model, double gamma_e, const SdrOptions& opts) {
  if (!(gamma_e > 0.0)) throw InvalidArgument("solve_p11_sdr_eqv: gamma_e must be positive");
  return solve_cc(model, gamma_e, EnergyRows::PerEr, 0.0, "p11_sdr_eqv", opts);
}

SdrSolveResult solve_p1_nosc_sdr(const SystemModel& model, const SdrOptions& opts) {
  return solve_cc(model, std::nullopt, EnergyRows::PerEr, 0.0, "p1_nosc", opts);
}

SdrSolveResult solve_p21_sdr(const SystemModel& model, double gamma_0, const SdrOptions& opts) {
  return solve_p21(model, gamma_0, true, "p21_sdr", opts);
}

SdrSolveResult solve_p2_nosc_sdr(const SystemModel& model, double gamma_0, const SdrOptions& opts) {
  return solve_p21(model, gamma_0, false, "p2_nosc", opts);
}

SdrSolveResult solve_p21_sdr_new(const SystemModel& model, double gamma_e, double e_star, const SdrOptions& opts) {
  if (!(e_star >= 0.0)) throw InvalidArgument("solve_p21_sdr_new: e_star must be nonnegative");
  return solve_cc(model, gamma_e, EnergyRows::WeightedFloor, e_star, "p21_sdr_new", opts);
}

SdrSolveResult solve_p1_sub1_sdp(const SystemModel& model, const std::vector<HermitianMatrix>& g_tilde,
                                 const SdrOptions& opts) {
  if (static_cast<int>(g_tilde.size()) != model.K()) {
    throw DimensionMismatch("solve_p1_sub1_sdp: one reduced channel per ER required");
  }
  std::vector<HermitianMatrix> gn;
  std::vector<double> e_norm;
  for (int k = 0; k < model.K(); ++k) {
    gn.push_back(g_tilde[static_cast<size_t>(k)] * (model.p_bar() / model.sigma_sq(k)));
    e_norm.push_back(model.e_bar(k) / (model.zeta() * model.sigma_sq(k)));
  }
  return solve_min_power(gn, e_norm, model.p_bar(), "p1_sub1_sdp", opts);
}

CovariancePair reconstruct_rank_one(const HermitianMatrix& S, const HermitianMatrix& Q, const CVector& h,
                                    double psd_tol) {
  if (S.dim() != h.size() || Q.dim() != h.size()) throw DimensionMismatch("reconstruct_rank_one: size mismatch");
  const CVector sh = S.matrix() * h;
  const double c = h.dot(sh).real();
  const double tr = S.trace();
  if (!(tr > 0.0) || c <= psd_tol * tr * h.squaredNorm()) {
    throw DegenerateInput("reconstruct_rank_one: h^H S h is numerically zero");
  }
  HermitianMatrix s_bar(CMatrix(sh * sh.adjoint() / c));
  HermitianMatrix q_bar(CMatrix(Q.matrix() + S.matrix() - s_bar.matrix()));
  return {std::move(s_bar), std::move(q_bar), std::nullopt};
}

HermitianMatrix reduce_rank(const HermitianMatrix& X, const std::vector<HermitianMatrix>& preserved, double rank_tol) {
  for (const auto& a : preserved) {
    if (a.dim() != X.dim()) throw DimensionMismatch("reduce_rank: size mismatch");
  }
  const int c = static_cast<int>(preserved.size());
  HermitianMatrix cur = X;
  const double reference = X.trace();
  if (!(reference > 0.0)) return cur;
  for (;;) {
    const auto es = linalg::hermitian_evd(cur);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
      if (es.values(i) > rank_tol * reference) keep.push_back(i);
    }
    const int r = static_cast<int>(keep.size());
    CMatrix V(X.dim(), r);
    for (int j = 0; j < r; ++j) {
      const Eigen::Index i = keep[static_cast<size_t>(j)];
      V.col(j) = std::sqrt(es.values(i)) * es.vectors.col(i);
    }
    if (r <= 1 || r * r <= c) return HermitianMatrix(CMatrix(V * V.adjoint()));
    // Real parameters of a Hermitian r x r direction D: diagonal entries,
    // then real and imaginary parts of the strict upper triangle.
    const int n = r * r;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(std::max(c, 1), n);
    for (int i = 0; i < c; ++i) {
      const CMatrix B = V.adjoint() * preserved[static_cast<size_t>(i)].matrix() * V;
      int col = 0;
      for (int d = 0; d < r; ++d) A(i, col++) = B(d, d).real();
      for (int p = 0; p < r; ++p) {
        for (int q = p + 1; q < r; ++q) {
          A(i, col++) = 2.0 * B(p, q).real();
          A(i, col++) = 2.0 * B(p, q).imag();
        }
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const Eigen::VectorXd x = svd.matrixV().col(n - 1);
    CMatrix D = CMatrix::Zero(r, r);
    int col = 0;
    for (int d = 0; d < r; ++d) D(d, d) = x(col++);
    for (int p = 0; p < r; ++p) {
      for (int q = p + 1; q < r; ++q) {
        D(p, q) = Complex(x(col), x(col + 1));
        D(q, p) = std::conj(D(p, q));
        col += 2;
      }
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> ds(D, Eigen::EigenvaluesOnly);
    const double lo = ds.eigenvalues().minCoeff();
    const double hi = ds.eigenvalues().maxCoeff();
    const double lead = std::abs(hi) >= std::abs(lo) ? hi : lo;
    // I - D / lead is PSD with at least one zero eigenvalue.
    const CMatrix step = CMatrix::Identity(r, r) - D / lead;
    cur = HermitianMatrix(CMatrix(V * step * V.adjoint()));
  }
}

RankOneReport rank_one_diagnostics(const SdrSolveResult& result, const SystemModel& model, double gamma_e,
                                   const SdrOptions& opts) {
  (void)gamma_e;
  RankOneReport rep;
  if (!result.ok() || !result.duals) return rep;
  const auto& d = *result.duals;
  const int M = model.M();
  const int K = model.K();
  rep.dual_act_tol = 1e-6 * std::max(1.0, std::abs(d.lambda));
  std::vector<int> active;
  for (int k = 0; k < K; ++k) {
    // Compared in normalized units; equal to beta_k when sigma_k = sigma0.
    const double beta_scaled = d.beta[static_cast<size_t>(k)] * model.sigma_sq(k) / model.sigma0_sq();
    if (beta_scaled > rep.dual_act_tol) active.push_back(k);
  }
  rep.active_caps = static_cast<int>(active.size());
  rep.active_caps_sufficient = rep.active_caps >= std::min(M - 1, K);
  rep.lambda_positive = d.lambda > rep.dual_act_tol;
  rep.theta_positive = d.theta * model.p_bar() / model.sigma0_sq() > rep.dual_act_tol;

  const double total = result.primal.S.trace() + result.primal.Q.trace();
  rep.rank_S = linalg::numerical_rank(result.primal.S, opts.rank_tol, total);
  rep.rank_Q = linalg::numerical_rank(result.primal.Q, opts.rank_tol, total);
  rep.rank_Q_bounded = rep.rank_Q <= std::min(K, M);

  CMatrix rows(1 + static_cast<Eigen::Index>(active.size()), M);
  rows.row(0) = model.h().adjoint();
  for (size_t i = 0; i < active.size(); ++i) rows.row(static_cast<Eigen::Index>(i + 1)) = model.g(active[i]).adjoint();
  try {
    const auto ns = linalg::null_space(rows);
    CMatrix a = -d.theta * CMatrix::Identity(M, M);
    for (int k = 0; k < K; ++k) {
      if (std::find(active.begin(), active.end(), k) != active.end()) continue;
      a += d.alpha[static_cast<size_t>(k)] * model.zeta() * model.G(k).matrix();
    }
    const HermitianMatrix reduced(CMatrix(ns.columns.adjoint() * a * ns.columns));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(reduced.matrix(), Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    const double scale = std::max(std::abs(lo), std::abs(hi));
    const double tol = 1e-9 * std::max(scale, std::abs(d.theta));
    rep.unique_rank_one_certified = (lo > tol) || (hi < -tol);
  } catch (const EmptyNullSpace&) {
    rep.unique_rank_one_certified = true;
  }
  return rep;
}

}  // namespace swipt
