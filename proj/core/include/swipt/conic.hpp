#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "swipt/hermitian.hpp"
#include "swipt/ipm.hpp"
#include "swipt/status.hpp"

namespace swipt {

/// Linear functional sum_j Tr(A_j X_j) + sum_s a_s x_s over the variables
/// of a ConicSdp.
struct LinearExpr {
  std::vector<std::pair<int, HermitianMatrix>> psd;
  std::vector<std::pair<int, double>> scalar;

  LinearExpr& add(int var, HermitianMatrix coeff) {
    psd.emplace_back(var, std::move(coeff));
    return *this;
  }
  LinearExpr& add_scalar(int var, double coeff) {
    scalar.emplace_back(var, coeff);
    return *this;
  }
};

/// Hermitian SDP over complex PSD matrix variables and nonnegative scalars.
class ConicSdp {
 public:
  enum class Sense { Minimize, Maximize };
  enum class Relation { Le, Ge, Eq };

  struct Constraint {
    LinearExpr expr;
    Relation rel;
    double rhs;
    std::string name;
  };

  int add_psd_variable(int dim, std::string name);
  int add_scalar_variable(std::string name);

  void set_objective(Sense sense, LinearExpr expr);
  int add_constraint(LinearExpr expr, Relation rel, double rhs, std::string name);

  const std::vector<int>& psd_dims() const { return psd_dims_; }
  const std::vector<std::string>& psd_names() const { return psd_names_; }
  const std::vector<std::string>& scalar_names() const { return scalar_names_; }
  int num_scalars() const { return static_cast<int>(scalar_names_.size()); }
  Sense sense() const { return sense_; }
  const LinearExpr& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Value of an expression at a candidate point.
  double evaluate(const LinearExpr& expr, const std::vector<HermitianMatrix>& psd,
                  const std::vector<double>& scalars) const;

 private:
  void check(const LinearExpr& expr) const;

  std::vector<int> psd_dims_;
  std::vector<std::string> psd_names_;
  std::vector<std::string> scalar_names_;
  Sense sense_ = Sense::Minimize;
  LinearExpr objective_;
  std::vector<Constraint> constraints_;
};

/// Multiplier convention: inequality multipliers are nonnegative and equal
/// |d(opt)/d(rhs)|; equality multipliers equal d(opt)/d(rhs).
struct ConicSolution {
  SolveStatus status = SolveStatus::NumericalTrouble;
  std::vector<HermitianMatrix> psd;
  std::vector<double> scalars;
  std::vector<double> duals;
  double objective = 0.0;
  double dual_objective = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double relative_gap = 0.0;
  int iterations = 0;
};

/// Backend contract: any solver for linear objectives over PSD cones with
/// linear constraints. Implementations must be safe to call concurrently.
class ConicSolver {
 public:
  virtual ~ConicSolver() = default;
  virtual ConicSolution solve(const ConicSdp& problem) const = 0;
  virtual std::string name() const = 0;
};

/// Lowers Hermitian variables to real PSD blocks via [[Re, -Im], [Im, Re]]
/// (coefficients are halved so traces are preserved) and inequality slacks
/// into the nonnegative orthant, then runs the built-in interior-point method.
class InteriorPointSolver : public ConicSolver {
 public:
  explicit InteriorPointSolver(ipm::IpmOptions options = {}) : options_(options) {}
  ConicSolution solve(const ConicSdp& problem) const override;
  std::string name() const override { return "hkm-ipm"; }

 private:
  ipm::IpmOptions options_;
};

const ConicSolver& default_solver();

/// Writes the problem in a plain-text conic format:
///
///   sense <minimize|maximize>
///   psd <index> <name> <dim>          (one line per matrix variable)
///   scalar <index> <name>             (nonnegative)
///   objective
///   constraint <index> <name> <le|ge|eq> <rhs>
///
/// followed after `objective` and each `constraint` line by its terms:
///
///   term psd <var> then <dim> rows of "re im" pairs, row-major
///   term scalar <var> <coefficient>
///   end
///
/// Numbers use 17 significant digits.
void write_conic_text(const ConicSdp& problem, std::ostream& os);

}  // namespace swipt
