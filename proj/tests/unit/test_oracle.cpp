#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "swipt/errors.hpp"
#include "swipt/metrics.hpp"
#include "swipt/oracle.hpp"
#include "swipt/p1.hpp"
#include "swipt/p2.hpp"

using namespace swipt;
using swipt::testing::orthogonal_instance;
using swipt::testing::vec2;

TEST(BruteForceOracle, OrthogonalP1) {
  // Leak-free: v0 on h with power 1 gives rate 1, the rest feeds the ER.
  const SystemModel m = orthogonal_instance(2.0, 1.0);
  const OracleResult o = brute_force_oracle(m, Problem::P1, 60);
  EXPECT_NEAR(o.objective, 1.0, 0.02);
  EXPECT_NEAR(o.objective, solve_p1(m).rate, 0.02);
  EXPECT_TRUE(check_constraints(m, o.solution, Problem::P1).empty());
}

TEST(BruteForceOracle, OrthogonalP2) {
  const SystemModel m = orthogonal_instance(4.0, 0.0, 1.0);
  const OracleResult o = brute_force_oracle(m, Problem::P2, 60);
  EXPECT_NEAR(o.objective, 3.0, 0.02 * 3.0);
  EXPECT_NEAR(o.objective, solve_p2(m).energy, 0.02 * 3.0);
}

TEST(BruteForceOracle, InfeasibleEnergyTarget) {
  const SystemModel m = orthogonal_instance(2.0, 3.0);
  EXPECT_FALSE(p1_feasible(m));
  EXPECT_THROW(brute_force_oracle(m, Problem::P1, 30), EmptyFeasibleSet);
}

TEST(BruteForceOracle, MatchesNoEnergyTargetSolve) {
  SystemSpec s;
  s.h = vec2(Complex(1.0, 0.2), Complex(-0.4, 0.7));
  s.g = {vec2(Complex(0.3, -0.5), Complex(0.9, 0.1))};
  s.sigma0_sq = 1.0;
  s.p_bar = 10.0;
  s.zeta = 0.5;
  const SystemModel m(s);
  const double solver = solve_p1_noet(m).rate;
  EXPECT_NEAR(brute_force_oracle(m, Problem::P1, 60).objective, solver, 0.02 * solver);
}

TEST(BruteForceOracle, TwoEnergyReceivers) {
  SystemSpec s;
  s.h = vec2(1.0, Complex(0.0, 0.3));
  s.g = {vec2(0.2, 1.0), vec2(Complex(0.5, 0.5), -0.7)};
  s.sigma0_sq = 1.0;
  s.p_bar = 10.0;
  s.zeta = 0.5;
  s.e_bar = {0.5, 0.5};
  const SystemModel m(s, false);
  const double solver = solve_p1(m).rate;
  const OracleResult o = brute_force_oracle(m, Problem::P1, 40);
  EXPECT_LE(o.objective, solver * (1.0 + 1e-6));
  EXPECT_NEAR(o.objective, solver, 0.05 * solver);
}

TEST(BruteForceOracle, RejectsLargeSystems) {
  const SystemModel m = swipt::testing::rayleigh_instance(4, 3, 7);
  EXPECT_THROW(brute_force_oracle(m, Problem::P1, 10), InvalidArgument);
}
