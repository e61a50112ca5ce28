#include "swipt/hermitian.hpp"

#include <algorithm>
#include <sstream>

#include "swipt/errors.hpp"

namespace swipt {

HermitianMatrix::HermitianMatrix(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("HermitianMatrix: input is not square");
  }
  const CMatrix anti = a - a.adjoint();
  asymmetry_ = 0.5 * anti.norm();
  if (asymmetry_ > Tolerances::kAsymmetry * std::max(1.0, a.norm())) {
    std::ostringstream msg;
    msg << "HermitianMatrix: asymmetry " << asymmetry_ << " exceeds tolerance";
    throw NotHermitian(msg.str());
  }
  m_ = 0.5 * (a + a.adjoint());
  // Exact real diagonal.
  for (Eigen::Index i = 0; i < m_.rows(); ++i) m_(i, i) = Complex(m_(i, i).real(), 0.0);
}

HermitianMatrix HermitianMatrix::Zero(Eigen::Index dim) {
  return HermitianMatrix(CMatrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::Identity(Eigen::Index dim) {
  return HermitianMatrix(CMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::OuterProduct(const CVector& x) {
  return HermitianMatrix(CMatrix(x * x.adjoint()));
}

double HermitianMatrix::trace_product(const HermitianMatrix& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("trace_product: dimension mismatch");
  // Tr(A B) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
  return (m_.array() * other.m_.array().conjugate()).sum().real();
}

double HermitianMatrix::quadratic_form(const CVector& x) const {
  if (x.size() != dim()) throw DimensionMismatch("quadratic_form: dimension mismatch");
  return x.dot(m_ * x).real();
}

bool HermitianMatrix::is_psd(double tol) const {
  if (dim() == 0) return true;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues()(0);
  const double scale = std::max(std::abs(trace()), m_.norm());
  if (scale == 0.0) return true;
  return min_eig >= -tol * scale;
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("operator+: dimension mismatch");
  return HermitianMatrix(CMatrix(m_ + other.m_));
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("operator-: dimension mismatch");
  return HermitianMatrix(CMatrix(m_ - other.m_));
}

HermitianMatrix HermitianMatrix::operator*(double s) const {
  return HermitianMatrix(CMatrix(m_ * s));
}

}  // namespace swipt
