#pragma once

#include <vector>

#include <Eigen/Dense>

#include "swipt/status.hpp"

namespace swipt::ipm {

/// Real block-diagonal SDP in standard equality form
///
///   minimize <C, X>  subject to  <A_i, X> = b_i,  X in K,
///
/// where K is a product of PSD cones (one per entry of block_dims) and a
/// nonnegative orthant of size lp_dim. Dual: maximize b^T y subject to
/// sum_i y_i A_i + Z = C, Z in K.
struct RealSdpProblem {
  struct Row {
    std::vector<Eigen::MatrixXd> blocks;  // symmetric; an empty matrix means zero
    Eigen::VectorXd lp;                   // empty means zero
  };

  std::vector<int> block_dims;
  int lp_dim = 0;
  std::vector<Eigen::MatrixXd> c_blocks;  // empty matrix means zero
  Eigen::VectorXd c_lp;                   // empty means zero
  std::vector<Row> rows;
  Eigen::VectorXd b;
};

struct IpmOptions {
  double tol = 1e-10;        // target relative residuals and gap
  double accept_tol = 1e-8;  // accepted when progress stalls before reaching tol
  double infeas_tol = 1e-8;  // certificate quality needed to declare infeasibility
  int max_iter = 120;
  double step_fraction = 0.98;
};

struct RealSdpSolution {
  SolveStatus status = SolveStatus::NumericalTrouble;
  std::vector<Eigen::MatrixXd> X;
  Eigen::VectorXd x_lp;
  Eigen::VectorXd y;
  std::vector<Eigen::MatrixXd> Z;
  Eigen::VectorXd z_lp;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  // Relative residuals measured on the row- and cost-normalized data.
  double primal_residual = 0.0;  // ||b - A(X)|| / (1 + ||b||)
  double dual_residual = 0.0;    // ||C - Z - A^T y|| / (1 + ||C||)
  double relative_gap = 0.0;
  int iterations = 0;
};

/// Infeasible-start primal-dual path following with the HKM search direction
/// and Mehrotra predictor-corrector steps. Rows and the cost are normalized
/// internally; results are reported in the caller's scaling.
RealSdpSolution solve_real_sdp(const RealSdpProblem& problem, const IpmOptions& options = {});

}  // namespace swipt::ipm
