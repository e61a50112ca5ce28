#include "swipt/conic.hpp"

#include <iomanip>
#include <ostream>

#include "swipt/errors.hpp"
#include "swipt/linalg.hpp"

namespace swipt {

int ConicSdp::add_psd_variable(int dim, std::string name) {
  if (dim < 1) throw InvalidArgument("ConicSdp: PSD variable dimension must be positive");
  psd_dims_.push_back(dim);
  psd_names_.push_back(std::move(name));
  return static_cast<int>(psd_dims_.size()) - 1;
}

int ConicSdp::add_scalar_variable(std::string name) {
  scalar_names_.push_back(std::move(name));
  return static_cast<int>(scalar_names_.size()) - 1;
}

void ConicSdp::check(const LinearExpr& expr) const {
  for (const auto& [var, coeff] : expr.psd) {
    if (var < 0 || var >= static_cast<int>(psd_dims_.size())) {
      throw InvalidArgument("ConicSdp: unknown PSD variable");
    }
    if (coeff.dim() != psd_dims_[static_cast<size_t>(var)]) {
      throw DimensionMismatch("ConicSdp: coefficient size differs from variable size");
    }
  }
  for (const auto& [var, coeff] : expr.scalar) {
    if (var < 0 || var >= num_scalars()) throw InvalidArgument("ConicSdp: unknown scalar variable");
  }
}

void ConicSdp::set_objective(Sense sense, LinearExpr expr) {
  check(expr);
  sense_ = sense;
  objective_ = std::move(expr);
}

int ConicSdp::add_constraint(LinearExpr expr, Relation rel, double rhs, std::string name) {
  check(expr);
  constraints_.push_back({std::move(expr), rel, rhs, std::move(name)});
  return static_cast<int>(constraints_.size()) - 1;
}

double ConicSdp::evaluate(const LinearExpr& expr, const std::vector<HermitianMatrix>& psd,
                          const std::vector<double>& scalars) const {
  double v = 0.0;
  for (const auto& [var, coeff] : expr.psd) v += coeff.trace_product(psd.at(static_cast<size_t>(var)));
  for (const auto& [var, coeff] : expr.scalar) v += coeff * scalars.at(static_cast<size_t>(var));
  return v;
}

namespace {

void accumulate(const LinearExpr& expr, double sign, const std::vector<int>& dims,
                std::vector<Eigen::MatrixXd>& blocks, Eigen::VectorXd& lp) {
  for (const auto& [var, coeff] : expr.psd) {
    auto& blk = blocks[static_cast<size_t>(var)];
    if (blk.size() == 0) blk = Eigen::MatrixXd::Zero(2 * dims[static_cast<size_t>(var)], 2 * dims[static_cast<size_t>(var)]);
    blk += (0.5 * sign) * linalg::complex_to_real_psd_embedding(coeff);
  }
  for (const auto& [var, coeff] : expr.scalar) lp(var) += sign * coeff;
}

}  // namespace

ConicSolution InteriorPointSolver::solve(const ConicSdp& problem) const {
  const auto& dims = problem.psd_dims();
  const size_t nb = dims.size();
  const int ns = problem.num_scalars();
  int n_slack = 0;
  for (const auto& c : problem.constraints()) {
    if (c.rel != ConicSdp::Relation::Eq) ++n_slack;
  }

  ipm::RealSdpProblem real;
  for (int d : dims) real.block_dims.push_back(2 * d);
  real.lp_dim = ns + n_slack;
  real.c_blocks.assign(nb, Eigen::MatrixXd());
  real.c_lp = Eigen::VectorXd::Zero(real.lp_dim);
  const bool maximize = problem.sense() == ConicSdp::Sense::Maximize;
  accumulate(problem.objective(), maximize ? -1.0 : 1.0, dims, real.c_blocks, real.c_lp);

  const auto m = static_cast<Eigen::Index>(problem.constraints().size());
  real.b.resize(m);
  int slack = ns;
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& c = problem.constraints()[static_cast<size_t>(i)];
    ipm::RealSdpProblem::Row row;
    row.blocks.assign(nb, Eigen::MatrixXd());
    row.lp = Eigen::VectorXd::Zero(real.lp_dim);
    accumulate(c.expr, 1.0, dims, row.blocks, row.lp);
    if (c.rel == ConicSdp::Relation::Le) row.lp(slack++) = 1.0;
    if (c.rel == ConicSdp::Relation::Ge) row.lp(slack++) = -1.0;
    real.rows.push_back(std::move(row));
    real.b(i) = c.rhs;
  }

  const ipm::RealSdpSolution rs = ipm::solve_real_sdp(real, options_);

  ConicSolution out;
  out.status = rs.status;
  out.iterations = rs.iterations;
  out.primal_residual = rs.primal_residual;
  out.dual_residual = rs.dual_residual;
  out.relative_gap = rs.relative_gap;
  for (size_t j = 0; j < nb; ++j) {
    out.psd.emplace_back(linalg::real_block_to_complex(rs.X[j]));
  }
  for (int s = 0; s < ns; ++s) out.scalars.push_back(rs.x_lp(s));
  out.duals.resize(static_cast<size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto rel = problem.constraints()[static_cast<size_t>(i)].rel;
    const double y = rs.y(i);
    double u = 0.0;
    switch (rel) {
      case ConicSdp::Relation::Le: u = -y; break;
      case ConicSdp::Relation::Ge: u = y; break;
      case ConicSdp::Relation::Eq: u = maximize ? -y : y; break;
    }
    out.duals[static_cast<size_t>(i)] = u;
  }
  out.objective = problem.evaluate(problem.objective(), out.psd, out.scalars);
  out.dual_objective = maximize ? -rs.dual_objective : rs.dual_objective;
  return out;
}

const ConicSolver& default_solver() {
  static const InteriorPointSolver solver;
  return solver;
}

namespace {

const char* relation_name(ConicSdp::Relation r) {
  switch (r) {
    case ConicSdp::Relation::Le: return "le";
    case ConicSdp::Relation::Ge: return "ge";
    case ConicSdp::Relation::Eq: return "eq";
  }
  return "?";
}

void write_terms(const LinearExpr& expr, std::ostream& os) {
  for (const auto& [var, coeff] : expr.psd) {
    os << "term psd " << var << "\n";
    for (Eigen::Index i = 0; i < coeff.dim(); ++i) {
      for (Eigen::Index j = 0; j < coeff.dim(); ++j) {
        if (j > 0) os << ' ';
        os << coeff(i, j).real() << ' ' << coeff(i, j).imag();
      }
      os << "\n";
    }
  }
  for (const auto& [var, coeff] : expr.scalar) os << "term scalar " << var << ' ' << coeff << "\n";
  os << "end\n";
}

}  // namespace

void write_conic_text(const ConicSdp& problem, std::ostream& os) {
  const auto old_prec = os.precision(17);
  os << "sense " << (problem.sense() == ConicSdp::Sense::Maximize ? "maximize" : "minimize") << "\n";
  for (size_t j = 0; j < problem.psd_dims().size(); ++j) {
    os << "psd " << j << ' ' << problem.psd_names()[j] << ' ' << problem.psd_dims()[j] << "\n";
  }
  for (size_t s = 0; s < problem.scalar_names().size(); ++s) {
    os << "scalar " << s << ' ' << problem.scalar_names()[s] << "\n";
  }
  os << "objective\n";
  write_terms(problem.objective(), os);
  for (size_t i = 0; i < problem.constraints().size(); ++i) {
    const auto& c = problem.constraints()[i];
    os << "constraint " << i << ' ' << c.name << ' ' << relation_name(c.rel) << ' ' << c.rhs << "\n";
    write_terms(c.expr, os);
  }
  os.precision(old_prec);
}

}  // namespace swipt
