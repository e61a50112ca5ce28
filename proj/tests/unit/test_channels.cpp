#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "swipt/channels.hpp"
#include "swipt/errors.hpp"

using namespace swipt;

TEST(Units, Conversions) {
  EXPECT_NEAR(dbm_to_watts(30.0), 1.0, 1e-15);
  EXPECT_NEAR(dbm_to_watts(-50.0), 1e-8, 1e-22);
  EXPECT_DOUBLE_EQ(db_to_linear(0.0), 1.0);
  EXPECT_NEAR(db_to_linear(-30.0), 1e-3, 1e-18);
}

TEST(Rng, ReproducibleAndStreamSeparated) {
  Rng a(42), b(42), c(42, 1);
  bool differs = false;
  for (int i = 0; i < 16; ++i) {
    const double x = a.normal();
    EXPECT_EQ(x, b.normal());
    differs = differs || x != c.normal();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, UniformRange) {
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Ula, BroadsideIsAllOnes) {
  ChannelConfig cfg;
  cfg.kind = ChannelKind::Ula;
  cfg.rho_h_sq_db = -20.0;
  cfg.rho_g_sq_db = {0.0};
  cfg.phi = {0.0, std::numbers::pi / 2};
  const ChannelDraw d = generate_channels(cfg, 2, 1);
  EXPECT_NEAR(std::abs(d.h(0) - 0.1), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(d.h(1) - 0.1), 0.0, 1e-15);
}

TEST(ChannelConfig, ErGainMustExceedIrGain) {
  ChannelConfig cfg;
  cfg.rho_h_sq_db = -30.0;
  cfg.rho_g_sq_db = {-30.0};
  EXPECT_THROW(generate_channels(cfg, 4, 1), InvalidArgument);
}

TEST(Ula, NineAntennaSevenErScenario) {
  const double pi = std::numbers::pi;
  ChannelConfig cfg;
  cfg.kind = ChannelKind::Ula;
  cfg.rho_h_sq_db = -70.0;
  cfg.rho_g_sq_db = {-30.0};
  cfg.phi = {11 * pi / 16, 0.0, pi / 6, 3 * pi / 8, pi / 2, 45 * pi / 64, 9 * pi / 8, 13 * pi / 9};
  const ChannelDraw d = generate_channels(cfg, 9, 7);
  EXPECT_NEAR(d.h.squaredNorm(), 9e-7, 1e-18);
  ASSERT_EQ(d.g.size(), 7u);
  for (const CVector& g : d.g) EXPECT_NEAR(g.squaredNorm(), 9e-3, 1e-15);
  const CVector s = ula_steering(9, std::sqrt(1e-7), 11 * pi / 16, 0.5);
  EXPECT_LT((s - d.h).norm(), 1e-18);
}

TEST(Ula, WrongAngleCountThrows) {
  ChannelConfig cfg;
  cfg.kind = ChannelKind::Ula;
  cfg.rho_g_sq_db = {-30.0};
  cfg.phi = {0.0, 1.0};
  EXPECT_THROW(generate_channels(cfg, 4, 3), InvalidArgument);
}

TEST(Rayleigh, DeterministicPerSeedAndStream) {
  ChannelConfig cfg;
  cfg.rho_g_sq_db = {-30.0};
  cfg.seed = 7;
  const ChannelDraw a = generate_channels(cfg, 4, 3);
  const ChannelDraw b = generate_channels(cfg, 4, 3);
  const ChannelDraw c = generate_channels(cfg, 4, 3, 1);
  EXPECT_EQ((a.h - b.h).norm(), 0.0);
  EXPECT_GT((a.h - c.h).norm(), 0.0);
}

TEST(Rayleigh, PerEntryVarianceMatchesMonteCarlo) {
  ChannelConfig cfg;
  cfg.rho_h_sq_db = -70.0;
  cfg.rho_g_sq_db = {-30.0};
  cfg.seed = 123;
  const int draws = 100000;
  const int M = 4;
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) {
    sum += generate_channels(cfg, M, 1, static_cast<std::uint64_t>(i)).h.squaredNorm() / M;
  }
  EXPECT_NEAR(sum / draws / 1e-7, 1.0, 0.02);
}

TEST(Rayleigh, PerErGainList) {
  ChannelConfig cfg;
  cfg.rho_h_sq_db = -70.0;
  cfg.rho_g_sq_db = {-30.0, -50.0};
  cfg.seed = 2;
  double big = 0.0, small = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ChannelDraw d = generate_channels(cfg, 4, 2, static_cast<std::uint64_t>(i));
    big += d.g[0].squaredNorm();
    small += d.g[1].squaredNorm();
  }
  EXPECT_NEAR(small / big, 1e-2, 2e-3);
}
