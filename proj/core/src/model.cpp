#include "swipt/model.hpp"

#include <cmath>
#include <sstream>

#include "swipt/errors.hpp"
#include "swipt/linalg.hpp"

namespace swipt {

namespace {

bool subset_full_rank(const std::vector<const CVector*>& rows, Eigen::Index m, double rank_tol) {
  CMatrix a(static_cast<Eigen::Index>(rows.size()), m);
  for (size_t i = 0; i < rows.size(); ++i) {
    a.row(static_cast<Eigen::Index>(i)) = rows[i]->adjoint() / rows[i]->norm();
  }
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return false;
  return sv(sv.size() - 1) > rank_tol * sv(0);
}

// Enumerates m-subsets of n indices in lexicographic order.
template <typename F>
bool for_each_subset(int n, int m, F&& f) {
  std::vector<int> idx(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    if (!f(idx)) return false;
    int i = m - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - m + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < m; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument("SystemModel: " + what);
}

}  // namespace

bool channels_independent(const CVector& h, const std::vector<CVector>& g, double rank_tol) {
  std::vector<const CVector*> all;
  all.push_back(&h);
  for (const auto& gk : g) all.push_back(&gk);
  for (const auto* v : all) {
    if (v->norm() == 0.0) return false;
  }
  const Eigen::Index m = h.size();
  const int n = static_cast<int>(all.size());
  if (n <= m) return subset_full_rank(all, m, rank_tol);
  return for_each_subset(n, static_cast<int>(m), [&](const std::vector<int>& idx) {
    std::vector<const CVector*> rows;
    rows.reserve(idx.size());
    for (int i : idx) rows.push_back(all[static_cast<size_t>(i)]);
    return subset_full_rank(rows, m, rank_tol);
  });
}

SystemModel::SystemModel(SystemSpec spec, bool check_independence, double rank_tol)
    : spec_(std::move(spec)) {
  const Eigen::Index m = spec_.h.size();
  require(m >= 2, "antenna count must be at least 2");
  require(!spec_.g.empty(), "at least one energy receiver is required");
  const size_t k = spec_.g.size();
  for (const auto& gk : spec_.g) {
    if (gk.size() != m) throw DimensionMismatch("SystemModel: ER channel length differs from M");
  }
  if (spec_.sigma_sq.empty()) spec_.sigma_sq.assign(k, spec_.sigma0_sq);
  if (spec_.mu.empty()) spec_.mu.assign(k, 1.0);
  if (spec_.e_bar.empty()) spec_.e_bar.assign(k, 0.0);
  if (spec_.sigma_sq.size() != k || spec_.mu.size() != k || spec_.e_bar.size() != k) {
    throw DimensionMismatch("SystemModel: per-ER parameter list length differs from K");
  }
  require(std::isfinite(spec_.p_bar) && spec_.p_bar > 0.0, "p_bar must be positive");
  require(spec_.zeta > 0.0 && spec_.zeta <= 1.0, "zeta must lie in (0, 1]");
  require(std::isfinite(spec_.sigma0_sq) && spec_.sigma0_sq > 0.0, "sigma0_sq must be positive");
  for (size_t i = 0; i < k; ++i) {
    require(std::isfinite(spec_.sigma_sq[i]) && spec_.sigma_sq[i] > 0.0, "sigma_sq must be positive");
    require(std::isfinite(spec_.mu[i]) && spec_.mu[i] >= 0.0, "mu must be nonnegative");
    require(std::isfinite(spec_.e_bar[i]) && spec_.e_bar[i] >= 0.0, "e_bar must be nonnegative");
  }
  require(std::isfinite(spec_.r_bar0) && spec_.r_bar0 >= 0.0, "r_bar0 must be nonnegative");
  require(spec_.h.allFinite(), "h must be finite");
  for (const auto& gk : spec_.g) require(gk.allFinite(), "g must be finite");
  if (check_independence && !channels_independent(spec_.h, spec_.g, rank_tol)) {
    throw LinearDependence("SystemModel: channel vectors are not linearly independent");
  }
}

SystemModel::SystemModel(SystemSpec spec, int) : spec_(std::move(spec)) {}

CMatrix SystemModel::ER_matrix() const {
  CMatrix out(K(), M());
  for (int k = 0; k < K(); ++k) out.row(k) = g(k).adjoint();
  return out;
}

SystemModel SystemModel::with_energy_targets(std::vector<double> e_bar) const {
  if (e_bar.size() != spec_.g.size()) throw DimensionMismatch("with_energy_targets: length differs from K");
  for (double e : e_bar) require(std::isfinite(e) && e >= 0.0, "e_bar must be nonnegative");
  SystemSpec s = spec_;
  s.e_bar = std::move(e_bar);
  return SystemModel(std::move(s), 0);
}

SystemModel SystemModel::with_uniform_energy_target(double e_bar) const {
  return with_energy_targets(std::vector<double>(spec_.g.size(), e_bar));
}

SystemModel SystemModel::with_rate_target(double r_bar0) const {
  require(std::isfinite(r_bar0) && r_bar0 >= 0.0, "r_bar0 must be nonnegative");
  SystemSpec s = spec_;
  s.r_bar0 = r_bar0;
  return SystemModel(std::move(s), 0);
}

SystemModel SystemModel::with_first_ers(int k) const {
  if (k < 1 || k > K()) throw InvalidArgument("with_first_ers: k out of range");
  SystemSpec s = spec_;
  const auto n = static_cast<size_t>(k);
  s.g.resize(n);
  s.sigma_sq.resize(n);
  s.mu.resize(n);
  s.e_bar.resize(n);
  return SystemModel(std::move(s), 0);
}

std::string to_string(Method m) {
  switch (m) {
    case Method::P1Optimal: return "p1_optimal";
    case Method::P2Optimal: return "p2_optimal";
    case Method::Sub1: return "sub1";
    case Method::Sub2: return "sub2";
    case Method::NoSC: return "nosc";
    case Method::NoIT: return "noit";
    case Method::NoET: return "noet";
  }
  return "unknown";
}

double BeamformingSolution::sum_power() const {
  double p = v0.squaredNorm();
  for (const auto& wi : w) p += wi.squaredNorm();
  return p;
}

CovariancePair beams_to_covariances(const BeamformingSolution& sol) {
  const Eigen::Index m = sol.v0.size();
  CMatrix q = CMatrix::Zero(m, m);
  for (const auto& wi : sol.w) {
    if (wi.size() != m) throw DimensionMismatch("beams_to_covariances: beam length mismatch");
    q += wi * wi.adjoint();
  }
  return {HermitianMatrix::OuterProduct(sol.v0), HermitianMatrix(q), std::nullopt};
}

BeamformingSolution covariances_to_beams(const CovariancePair& cov, double rank_tol, Method method) {
  if (cov.S.dim() != cov.Q.dim()) throw DimensionMismatch("covariances_to_beams: S and Q differ in size");
  BeamformingSolution sol;
  sol.method = method;
  const auto es = linalg::hermitian_evd(cov.S);
  const double s1 = std::max(es.values(0), 0.0);
  if (es.values.size() > 1 && es.values(1) > rank_tol * s1 && es.values(1) > 0.0) {
    std::ostringstream msg;
    msg << "covariances_to_beams: S has second eigenvalue " << es.values(1) << " vs first " << s1;
    throw RankOneViolation(msg.str());
  }
  sol.v0 = std::sqrt(s1) * es.vectors.col(0);
  const auto eq = linalg::hermitian_evd(cov.Q);
  const double q1 = eq.values(0);
  if (q1 > 0.0) {
    for (Eigen::Index i = 0; i < eq.values.size(); ++i) {
      if (eq.values(i) > rank_tol * q1) sol.w.emplace_back(std::sqrt(eq.values(i)) * eq.vectors.col(i));
    }
  }
  return sol;
}

}  // namespace swipt
