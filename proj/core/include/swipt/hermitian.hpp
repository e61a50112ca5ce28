#pragma once

#include <complex>

#include <Eigen/Dense>

namespace swipt {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Tolerance defaults shared across modules.
struct Tolerances {
  static constexpr double kPsd = 1e-7;       // most negative eigenvalue / trace
  static constexpr double kRank = 1e-6;      // lambda_2 / lambda_1 for rank one
  static constexpr double kFeas = 1e-6;      // relative constraint slack
  static constexpr double kEig = 1e-9;       // reconstruction accuracy
  static constexpr double kAsymmetry = 1e-6; // accepted Hermitian defect
};

/// Complex matrix with exact conjugate symmetry.
///
/// Construction symmetrizes the input as (A + A^H) / 2 and keeps the size of
/// the removed anti-Hermitian part. Inputs whose asymmetry exceeds
/// Tolerances::kAsymmetry * max(1, ||A||_F) are rejected with NotHermitian.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const CMatrix& a);

  static HermitianMatrix Zero(Eigen::Index dim);
  static HermitianMatrix Identity(Eigen::Index dim);
  /// x x^H
  static HermitianMatrix OuterProduct(const CVector& x);

  Eigen::Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  double asymmetry() const { return asymmetry_; }
  double trace() const { return m_.trace().real(); }
  /// Re Tr(this * other); exact for Hermitian pairs.
  double trace_product(const HermitianMatrix& other) const;
  /// x^H A x
  double quadratic_form(const CVector& x) const;
  double norm() const { return m_.norm(); }

  /// Most negative eigenvalue relative to trace is above -tol.
  bool is_psd(double tol = Tolerances::kPsd) const;

  HermitianMatrix operator+(const HermitianMatrix& other) const;
  HermitianMatrix operator-(const HermitianMatrix& other) const;
  HermitianMatrix operator*(double s) const;

 private:
  CMatrix m_;
  double asymmetry_ = 0.0;
};

inline HermitianMatrix operator*(double s, const HermitianMatrix& a) { return a * s; }

}  // namespace swipt
