#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "swipt/hermitian.hpp"

namespace swipt {

double db_to_linear(double x_db);
double dbm_to_watts(double x_dbm);

/// Deterministic random stream.
///
/// Engine: std::mt19937_64 (MT19937-64, fully specified by the C++ standard)
/// seeded with SplitMix64(seed) mixed with SplitMix64(stream). Uniform doubles
/// are (x >> 11) * 2^-53; normals use the Box-Muller transform (both outputs
/// consumed in order). None of this relies on std distributions, whose output
/// is implementation defined, so seeds are portable.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal.
  double normal();
  /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
  Complex cscg(double variance);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

enum class ChannelKind { Rayleigh, Ula };

struct ChannelConfig {
  ChannelKind kind = ChannelKind::Rayleigh;
  double rho_h_sq_db = -70.0;
  std::vector<double> rho_g_sq_db;  // one per ER; a single entry is broadcast
  std::vector<double> phi;          // Ula only: phi[0] is the IR direction, then one per ER
  double spacing_over_lambda = 0.5;
  std::uint64_t seed = 0;
};

struct ChannelDraw {
  CVector h;
  std::vector<CVector> g;
  std::vector<std::string> warnings;
  int attempts = 1;
};

/// Rayleigh: i.i.d. CSCG entries with per-entry variance rho^2, redrawn up
/// to 100 times until the independence check passes. Ula: steering vectors
/// rho * exp(j n theta), theta = -2 pi (d / lambda) sin(phi).
/// Throws InvalidArgument for malformed configs and LinearDependence when the
/// channels fail the independence check.
ChannelDraw generate_channels(const ChannelConfig& cfg, int M, int K, std::uint64_t stream = 0,
                              double rank_tol = Tolerances::kRank);

/// Steering vector rho * (1, e^{j theta}, ..., e^{j (M-1) theta}).
CVector ula_steering(int M, double rho, double phi, double spacing_over_lambda);

}  // namespace swipt
