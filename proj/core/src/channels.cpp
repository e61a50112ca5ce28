#include "swipt/channels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "swipt/errors.hpp"
#include "swipt/model.hpp"

namespace swipt {

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double dbm_to_watts(double x_dbm) { return std::pow(10.0, (x_dbm - 30.0) / 10.0); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(seed) ^ splitmix64(stream + 0xD1B54A32D192ED03ULL)) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Complex Rng::cscg(double variance) {
  const double s = std::sqrt(variance / 2.0);
  const double re = normal();
  const double im = normal();
  return {s * re, s * im};
}

CVector ula_steering(int M, double rho, double phi, double spacing_over_lambda) {
  const double theta = -2.0 * std::numbers::pi * spacing_over_lambda * std::sin(phi);
  CVector v(M);
  for (int n = 0; n < M; ++n) v(n) = rho * std::polar(1.0, n * theta);
  return v;
}

namespace {

std::vector<double> per_er_db(const ChannelConfig& cfg, int K) {
  if (cfg.rho_g_sq_db.size() == 1) return std::vector<double>(static_cast<size_t>(K), cfg.rho_g_sq_db[0]);
  if (cfg.rho_g_sq_db.size() != static_cast<size_t>(K)) {
    throw InvalidArgument("ChannelConfig: rho_g_sq_db needs 1 or K entries");
  }
  return cfg.rho_g_sq_db;
}

}  // namespace

ChannelDraw generate_channels(const ChannelConfig& cfg, int M, int K, std::uint64_t stream,
                              double rank_tol) {
  if (M < 2 || K < 1) throw InvalidArgument("generate_channels: need M >= 2 and K >= 1");
  const auto g_db = per_er_db(cfg, K);
  for (double gdb : g_db) {
    if (!(gdb > cfg.rho_h_sq_db)) {
      throw InvalidArgument("ChannelConfig: every rho_g_sq_db must exceed rho_h_sq_db");
    }
  }
  const double rho_h_sq = db_to_linear(cfg.rho_h_sq_db);
  ChannelDraw out;

  if (cfg.kind == ChannelKind::Ula) {
    if (cfg.phi.size() != static_cast<size_t>(K + 1)) {
      throw InvalidArgument("ChannelConfig: Ula needs K + 1 angles");
    }
    if (!(cfg.spacing_over_lambda > 0.0)) throw InvalidArgument("ChannelConfig: spacing must be positive");
    for (size_t i = 0; i < cfg.phi.size(); ++i) {
      for (size_t j = i + 1; j < cfg.phi.size(); ++j) {
        if (std::abs(cfg.phi[i] - cfg.phi[j]) <= 1e-9) {
          std::ostringstream msg;
          msg << "angles " << i << " and " << j << " coincide";
          out.warnings.push_back(msg.str());
        }
      }
    }
    out.h = ula_steering(M, std::sqrt(rho_h_sq), cfg.phi[0], cfg.spacing_over_lambda);
    for (int k = 0; k < K; ++k) {
      out.g.push_back(ula_steering(M, std::sqrt(db_to_linear(g_db[static_cast<size_t>(k)])),
                                   cfg.phi[static_cast<size_t>(k + 1)], cfg.spacing_over_lambda));
    }
    if (!channels_independent(out.h, out.g, rank_tol)) {
      throw LinearDependence("generate_channels: Ula channels are linearly dependent");
    }
    return out;
  }

  Rng rng(cfg.seed, stream);
  constexpr int kMaxAttempts = 100;
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    out.h = CVector(M);
    for (int m = 0; m < M; ++m) out.h(m) = rng.cscg(rho_h_sq);
    out.g.assign(static_cast<size_t>(K), CVector(M));
    for (int k = 0; k < K; ++k) {
      const double var = db_to_linear(g_db[static_cast<size_t>(k)]);
      for (int m = 0; m < M; ++m) out.g[static_cast<size_t>(k)](m) = rng.cscg(var);
    }
    out.attempts = attempt;
    if (channels_independent(out.h, out.g, rank_tol)) return out;
  }
  throw LinearDependence("generate_channels: no independent Rayleigh draw in 100 attempts");
}

}  // namespace swipt
