#include "swipt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swipt/errors.hpp"

namespace swipt::linalg {

void normalize_phase(Eigen::Ref<CVector> v) {
  if (v.size() == 0) return;
  const double vmax = v.cwiseAbs().maxCoeff();
  if (vmax == 0.0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > 1e-12 * vmax) {
      v *= std::conj(v(i)) / mag;
      v(i) = Complex(v(i).real(), 0.0);
      return;
    }
  }
}

HermitianEigen hermitian_evd(const HermitianMatrix& a) {
  const Eigen::Index n = a.dim();
  HermitianEigen out;
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a.matrix());
  out.values.resize(n);
  out.vectors.resize(n, n);
  // Eigen returns ascending order.
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = es.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
    normalize_phase(out.vectors.col(i));
  }
  return out;
}

EigPair max_eigpair(const HermitianMatrix& a) {
  if (a.dim() == 0) throw DimensionMismatch("max_eigpair: empty matrix");
  const auto evd = hermitian_evd(a);
  return {evd.values(0), evd.vectors.col(0)};
}

NullSpaceBasis null_space(const CMatrix& a, std::optional<double> tol) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  if (cols == 0) throw EmptyNullSpace("null_space: matrix has no columns");
  NullSpaceBasis out;
  if (rows == 0) {
    out.columns = CMatrix::Identity(cols, cols);
    out.tol = tol.value_or(0.0);
    return out;
  }
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  out.tol = tol.value_or(static_cast<double>(std::max(rows, cols)) *
                         std::numeric_limits<double>::epsilon() * smax);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > out.tol) ++rank;
  }
  if (rank >= cols) throw EmptyNullSpace("null_space: matrix has full column rank");
  out.columns = svd.matrixV().rightCols(cols - rank);
  for (Eigen::Index j = 0; j < out.columns.cols(); ++j) normalize_phase(out.columns.col(j));
  return out;
}

NullSpaceBasis orth_complement_of_vector(const CVector& h) {
  if (h.size() == 0 || h.norm() == 0.0) {
    throw InvalidArgument("orth_complement_of_vector: zero vector");
  }
  const CMatrix row = h.adjoint();
  return null_space(row);
}

Eigen::MatrixXd complex_to_real_embedding(const CMatrix& a) {
  const Eigen::Index r = a.rows();
  const Eigen::Index c = a.cols();
  Eigen::MatrixXd out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = a.real();
  out.topRightCorner(r, c) = -a.imag();
  out.bottomLeftCorner(r, c) = a.imag();
  out.bottomRightCorner(r, c) = a.real();
  return out;
}

Eigen::MatrixXd complex_to_real_psd_embedding(const HermitianMatrix& a) {
  return complex_to_real_embedding(a.matrix());
}

CMatrix real_block_to_complex(const Eigen::MatrixXd& x) {
  const Eigen::Index n = x.rows() / 2;
  const Eigen::MatrixXd re = 0.5 * (x.topLeftCorner(n, n) + x.bottomRightCorner(n, n));
  const Eigen::MatrixXd im = 0.5 * (x.bottomLeftCorner(n, n) - x.topRightCorner(n, n));
  CMatrix out(n, n);
  out.real() = re;
  out.imag() = im;
  return out;
}

int numerical_rank(const HermitianMatrix& a, double tol, double reference) {
  if (a.dim() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a.matrix(), Eigen::EigenvaluesOnly);
  int rank = 0;
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    if (es.eigenvalues()(i) > tol * reference) ++rank;
  }
  return rank;
}

}  // namespace swipt::linalg
