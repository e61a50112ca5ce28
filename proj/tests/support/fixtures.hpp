#pragma once

#include <vector>

#include "swipt/channels.hpp"
#include "swipt/model.hpp"

namespace swipt::testing {

inline CVector vec2(Complex a, Complex b) {
  CVector v(2);
  v << a, b;
  return v;
}

/// M = 2, K = 1, h = e1, g = e2, unit noise and zeta = 1.
inline SystemModel orthogonal_instance(double p_bar, double e_bar, double r_bar0 = 0.0) {
  SystemSpec s;
  s.h = vec2(1.0, 0.0);
  s.g = {vec2(0.0, 1.0)};
  s.sigma0_sq = 1.0;
  s.p_bar = p_bar;
  s.zeta = 1.0;
  s.e_bar = {e_bar};
  s.r_bar0 = r_bar0;
  return SystemModel(s);
}

/// Rayleigh instance with the M = 4, K = 3 link budget: -70 dB to the IR,
/// -30 dB to the ERs, -50 dBm noise, 1 W budget, zeta = 0.5.
inline SystemModel rayleigh_instance(int M, int K, std::uint64_t seed, double e_bar_w = 0.0, double r_bar0 = 0.0,
                                     std::uint64_t stream = 0) {
  ChannelConfig cfg;
  cfg.kind = ChannelKind::Rayleigh;
  cfg.rho_h_sq_db = -70.0;
  cfg.rho_g_sq_db = {-30.0};
  cfg.seed = seed;
  const ChannelDraw d = generate_channels(cfg, M, K, stream);
  SystemSpec s;
  s.h = d.h;
  s.g = d.g;
  s.sigma0_sq = dbm_to_watts(-50.0);
  s.p_bar = 1.0;
  s.zeta = 0.5;
  s.e_bar = std::vector<double>(static_cast<size_t>(K), e_bar_w);
  s.r_bar0 = r_bar0;
  return SystemModel(s);
}

}  // namespace swipt::testing
