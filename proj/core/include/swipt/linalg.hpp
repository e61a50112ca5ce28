#pragma once

#include <optional>

#include <Eigen/Dense>

#include "swipt/hermitian.hpp"

namespace swipt::linalg {

/// Eigen-decomposition of a Hermitian matrix, eigenvalues in descending order.
///
/// Eigenvector phase is fixed so that the first component whose magnitude
/// exceeds 1e-12 * max|component| is real and positive.
struct HermitianEigen {
  Eigen::VectorXd values;
  CMatrix vectors;
};

/// Orthonormal basis for a numerical null space together with the cutoff used.
struct NullSpaceBasis {
  CMatrix columns;
  double tol = 0.0;

  Eigen::Index size() const { return columns.cols(); }
};

HermitianEigen hermitian_evd(const HermitianMatrix& a);

/// Largest eigenvalue and its unit eigenvector.
struct EigPair {
  double value = 0.0;
  CVector vector;
};
EigPair max_eigpair(const HermitianMatrix& a);

/// Right null space of a (rows x cols) matrix.
///
/// Default cutoff is max(rows, cols) * eps * sigma_max. Throws EmptyNullSpace
/// when the matrix has full column rank.
NullSpaceBasis null_space(const CMatrix& a, std::optional<double> tol = std::nullopt);

/// Orthonormal basis X of the complement of h, so that X X^H = I - h h^H / |h|^2.
NullSpaceBasis orth_complement_of_vector(const CVector& h);

/// [[Re A, -Im A], [Im A, Re A]]
Eigen::MatrixXd complex_to_real_psd_embedding(const HermitianMatrix& a);
Eigen::MatrixXd complex_to_real_embedding(const CMatrix& a);

/// Inverse of the embedding for real symmetric blocks that are not exactly
/// structured: averages the two diagonal blocks and the off-diagonal blocks.
CMatrix real_block_to_complex(const Eigen::MatrixXd& x);

/// Number of eigenvalues above tol * reference.
int numerical_rank(const HermitianMatrix& a, double tol, double reference);

/// Makes the first significant entry of v real and positive.
void normalize_phase(Eigen::Ref<CVector> v);

}  // namespace swipt::linalg
