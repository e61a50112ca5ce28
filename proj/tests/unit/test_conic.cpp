#include <gtest/gtest.h>

#include <sstream>

#include "swipt/conic.hpp"
#include "swipt/errors.hpp"

using namespace swipt;

namespace {

HermitianMatrix outer(Complex a, Complex b) {
  CVector v(2);
  v << a, b;
  return HermitianMatrix::OuterProduct(v);
}

}  // namespace

// max Tr(C X) s.t. Tr(X) = 1, X >= 0 equals the top eigenvalue of C.
TEST(InteriorPointSolver, TopEigenvalueOfComplexMatrix) {
  CMatrix c(2, 2);
  c << 1.0, Complex(0.0, 1.0), Complex(0.0, -1.0), 1.0;  // eigenvalues 0 and 2
  ConicSdp p;
  const int x = p.add_psd_variable(2, "X");
  p.set_objective(ConicSdp::Sense::Maximize, LinearExpr().add(x, HermitianMatrix(c)));
  p.add_constraint(LinearExpr().add(x, HermitianMatrix::Identity(2)), ConicSdp::Relation::Eq, 1.0, "trace");
  const ConicSolution s = default_solver().solve(p);
  ASSERT_EQ(s.status, SolveStatus::Optimal);
  EXPECT_NEAR(s.objective, 2.0, 1e-7);
  EXPECT_NEAR(s.psd[0].trace(), 1.0, 1e-7);
  EXPECT_NEAR(s.duals[0], 2.0, 1e-6);
}

TEST(InteriorPointSolver, ScalarsAndInequalities) {
  // min t s.t. t >= Tr(A X), Tr(X) >= 1
  ConicSdp p;
  const int x = p.add_psd_variable(2, "X");
  const int t = p.add_scalar_variable("t");
  p.set_objective(ConicSdp::Sense::Minimize, LinearExpr().add_scalar(t, 1.0));
  p.add_constraint(LinearExpr().add_scalar(t, 1.0).add(x, outer(1.0, 0.0) * -1.0 + outer(0.0, 1.0) * -3.0),
                   ConicSdp::Relation::Ge, 0.0, "epigraph");
  p.add_constraint(LinearExpr().add(x, HermitianMatrix::Identity(2)), ConicSdp::Relation::Ge, 1.0, "mass");
  const ConicSolution s = default_solver().solve(p);
  ASSERT_EQ(s.status, SolveStatus::Optimal);
  EXPECT_NEAR(s.objective, 1.0, 1e-7);
  EXPECT_NEAR(std::abs(s.psd[0](0, 0)), 1.0, 1e-5);
  EXPECT_GE(s.duals[1], 0.0);
}

TEST(InteriorPointSolver, DetectsInfeasibility) {
  ConicSdp p;
  const int x = p.add_psd_variable(2, "X");
  p.set_objective(ConicSdp::Sense::Minimize, LinearExpr().add(x, HermitianMatrix::Identity(2)));
  p.add_constraint(LinearExpr().add(x, HermitianMatrix::Identity(2)), ConicSdp::Relation::Le, -1.0, "negative");
  EXPECT_EQ(default_solver().solve(p).status, SolveStatus::Infeasible);
}

TEST(ConicSdp, EvaluateExpression) {
  ConicSdp p;
  const int x = p.add_psd_variable(2, "X");
  const int t = p.add_scalar_variable("t");
  const LinearExpr e = LinearExpr().add(x, HermitianMatrix::Identity(2)).add_scalar(t, 2.0);
  EXPECT_DOUBLE_EQ(p.evaluate(e, {HermitianMatrix::Identity(2) * 3.0}, {0.5}), 7.0);
}

TEST(ConicSdp, RejectsUnknownVariable) {
  ConicSdp p;
  p.add_psd_variable(2, "X");
  EXPECT_THROW(p.add_constraint(LinearExpr().add(3, HermitianMatrix::Identity(2)), ConicSdp::Relation::Eq, 1.0, "bad"),
               Error);
}

TEST(WriteConicText, DocumentedLayout) {
  ConicSdp p;
  const int x = p.add_psd_variable(1, "X");
  const int t = p.add_scalar_variable("t");
  CMatrix one(1, 1);
  one << 2.0;
  p.set_objective(ConicSdp::Sense::Maximize, LinearExpr().add(x, HermitianMatrix(one)));
  p.add_constraint(LinearExpr().add_scalar(t, 1.0), ConicSdp::Relation::Le, 4.0, "cap");
  std::ostringstream os;
  write_conic_text(p, os);
  const std::string text = os.str();
  EXPECT_NE(text.find("sense maximize"), std::string::npos);
  EXPECT_NE(text.find("psd 0 X 1"), std::string::npos);
  EXPECT_NE(text.find("scalar 0 t"), std::string::npos);
  EXPECT_NE(text.find("constraint 0 cap le 4"), std::string::npos);
  EXPECT_NE(text.find("term scalar 0 1"), std::string::npos);
}
