#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "swipt/metrics.hpp"
#include "swipt/p1.hpp"
#include "swipt/p2.hpp"

using namespace swipt;
using swipt::testing::orthogonal_instance;
using swipt::testing::vec2;

namespace {

bool has(const std::vector<Violation>& v, const std::string& id) {
  for (const auto& x : v) {
    if (x.id == id) return true;
  }
  return false;
}

}  // namespace

TEST(Evaluate, NoInformationBeam) {
  const SystemModel m = orthogonal_instance(4.0, 0.0);
  BeamformingSolution sol;
  sol.v0 = CVector::Zero(2);
  sol.w = {vec2(1.0, 1.0)};
  const MetricsReport r = evaluate(m, sol);
  EXPECT_EQ(r.sinr0, 0.0);
  EXPECT_EQ(r.secrecy_rate, 0.0);
  EXPECT_NEAR(r.energy[0], m.zeta() * 1.0, 1e-15);
  EXPECT_NEAR(r.sum_power, 2.0, 1e-15);
}

TEST(Evaluate, EqualSinrsGiveZeroRate) {
  SystemSpec s;
  s.h = vec2(1.0, 0.0);
  s.g = {vec2(1.0, 1.0)};
  s.sigma0_sq = 1.0;
  s.p_bar = 2.0;
  const SystemModel m(s);
  BeamformingSolution sol;
  sol.v0 = vec2(1.0, 0.0);
  const MetricsReport r = evaluate(m, sol);
  EXPECT_NEAR(r.sinr0, r.sinr[0], 1e-15);
  EXPECT_NEAR(r.raw_rate, 0.0, 1e-15);
  EXPECT_EQ(r.secrecy_rate, 0.0);
}

TEST(Evaluate, OrthogonalInstance) {
  const SystemModel m = orthogonal_instance(2.0, 0.0);
  BeamformingSolution sol;
  sol.v0 = vec2(1.0, 0.0);
  sol.w = {vec2(0.0, 1.0)};
  const MetricsReport r = evaluate(m, sol);
  EXPECT_NEAR(r.sinr0, 1.0, 1e-15);
  EXPECT_NEAR(r.sinr[0], 0.0, 1e-15);
  EXPECT_NEAR(r.secrecy_rate, 1.0, 1e-15);
  EXPECT_NEAR(r.energy[0], 1.0, 1e-15);
  EXPECT_NEAR(r.weighted_energy, 1.0, 1e-15);
  EXPECT_NEAR(r.min_energy(), 1.0, 1e-15);
}

TEST(Evaluate, CovarianceFormMatchesBeams) {
  const SystemModel m = swipt::testing::rayleigh_instance(4, 3, 7);
  BeamformingSolution sol;
  sol.v0 = CVector::Constant(4, Complex(0.3, -0.2));
  sol.w = {CVector::Constant(4, Complex(0.1, 0.4))};
  const MetricsReport a = evaluate(m, sol);
  const MetricsReport b = evaluate(m, beams_to_covariances(sol));
  EXPECT_NEAR(a.sinr0, b.sinr0, 1e-12 * a.sinr0);
  EXPECT_NEAR(a.raw_rate, b.raw_rate, 1e-12);
  EXPECT_NEAR(a.weighted_energy, b.weighted_energy, 1e-12 * a.weighted_energy);
}

TEST(CheckConstraints, FeasibleP1OptimumIsClean) {
  const SystemModel m = orthogonal_instance(2.0, 1.0);
  const P1Result r = solve_p1(m);
  EXPECT_TRUE(check_constraints(m, r.solution, Problem::P1).empty());
}

TEST(CheckConstraints, DoubledBeamsBreakPower) {
  const SystemModel m = orthogonal_instance(2.0, 1.0);
  BeamformingSolution sol;
  sol.v0 = vec2(1.0, 0.0);
  sol.w = {vec2(0.0, 1.0)};
  EXPECT_TRUE(check_constraints(m, sol, Problem::P1).empty());
  sol.v0 *= std::sqrt(2.0);
  sol.w[0] *= std::sqrt(2.0);
  const auto v = check_constraints(m, sol, Problem::P1);
  ASSERT_TRUE(has(v, "power"));
  for (const auto& x : v) {
    if (x.id == "power") EXPECT_NEAR(x.magnitude, m.p_bar(), 1e-12);
  }
}

TEST(CheckConstraints, EnergyShortfall) {
  const SystemModel m = orthogonal_instance(2.0, 1.5);
  BeamformingSolution sol;
  sol.v0 = vec2(1.0, 0.0);
  sol.w = {vec2(0.0, 1.0)};
  const auto v = check_constraints(m, sol, Problem::P1);
  ASSERT_TRUE(has(v, "energy_0"));
  EXPECT_NEAR(v.front().magnitude, 0.5, 1e-12);
  EXPECT_TRUE(check_constraints(m, sol, Problem::P2).empty());
}

TEST(CheckConstraints, RateBumpShowsAsRateViolation) {
  const SystemModel m = orthogonal_instance(4.0, 0.0, 1.0);
  const P2Result r = solve_p2(m);
  EXPECT_FALSE(has(check_constraints(m, r.solution, Problem::P2), "rate"));
  const double rate = evaluate(m, r.solution).secrecy_rate;
  const auto v = check_constraints(m.with_rate_target(rate + 0.25), r.solution, Problem::P2);
  ASSERT_TRUE(has(v, "rate"));
  for (const auto& x : v) {
    if (x.id == "rate") EXPECT_NEAR(x.magnitude, 0.25, 1e-12);
  }
}
