#include "swipt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "swipt/errors.hpp"

namespace swipt {

namespace {

struct Direction {
  CVector u;
  double gh = 0.0;
  double gg[2] = {0.0, 0.0};
};

// Per unit of energy power: one beam, or two orthogonal beams sharing it.
struct Pattern {
  int dir = 0;
  double share = 1.0;  // fraction on `dir`, the rest on its orthogonal complement
  double gh = 0.0;
  double gg[2] = {0.0, 0.0};
};

Direction make_direction(const SystemModel& model, const CVector& u) {
  Direction d;
  d.u = u;
  d.gh = std::norm(u.dot(model.h()));
  for (int k = 0; k < model.K(); ++k) d.gg[k] = std::norm(u.dot(model.g(k)));
  return d;
}

CVector orthogonal_of(const CVector& u) {
  CVector v(2);
  v << -std::conj(u(1)), std::conj(u(0));
  return v;
}

bool dominates(const Pattern& a, const Pattern& b, int K) {
  if (a.gh > b.gh) return false;
  for (int k = 0; k < K; ++k) {
    if (a.gg[k] < b.gg[k]) return false;
  }
  return true;
}

std::vector<Pattern> undominated(std::vector<Pattern> all, int K) {
  std::stable_sort(all.begin(), all.end(), [](const Pattern& a, const Pattern& b) { return a.gh < b.gh; });
  std::vector<Pattern> kept;
  for (const Pattern& p : all) {
    bool dominated = false;
    for (const Pattern& q : kept) {
      if (dominates(q, p, K)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(p);
  }
  return kept;
}

}  // namespace

OracleResult brute_force_oracle(const SystemModel& model, Problem problem, int resolution) {
  if (model.M() != 2 || model.K() > 2) throw InvalidArgument("brute_force_oracle: needs M = 2 and K <= 2");
  if (resolution < 2) throw InvalidArgument("brute_force_oracle: resolution must be at least 2");
  const int K = model.K();
  const int res = resolution;
  const double pi = std::numbers::pi;

  std::vector<Direction> dirs;
  for (int ia = 0; ia < res; ++ia) {
    const double a = 0.5 * pi * ia / (res - 1);
    for (int ib = 0; ib < res; ++ib) {
      if (ia == 0 && ib > 0) break;  // b is irrelevant when sin a = 0
      const double b = 2.0 * pi * ib / res;
      CVector u(2);
      u << std::cos(a), std::sin(a) * std::polar(1.0, b);
      dirs.push_back(make_direction(model, u));
    }
  }

  std::vector<Pattern> patterns;
  for (int d = 0; d < static_cast<int>(dirs.size()); ++d) {
    if (K <= 1) {
      patterns.push_back({d, 1.0, dirs[d].gh, {dirs[d].gg[0], dirs[d].gg[1]}});
      continue;
    }
    const Direction perp = make_direction(model, orthogonal_of(dirs[d].u));
    for (int is = 0; is <= res; ++is) {
      const double s = static_cast<double>(is) / res;
      Pattern p{d, s, s * dirs[d].gh + (1 - s) * perp.gh, {}};
      for (int k = 0; k < K; ++k) p.gg[k] = s * dirs[d].gg[k] + (1 - s) * perp.gg[k];
      patterns.push_back(p);
    }
  }
  patterns = undominated(std::move(patterns), K);

  const double p_bar = model.p_bar();
  const double rate_ratio = std::exp2(model.r_bar0());
  OracleResult out;
  bool found = false;
  double best = -1.0;
  int best_dir = 0, best_pat = 0, best_i = 0;
  for (int i = 0; i <= res; ++i) {
    const double p = p_bar * i / res;
    const double q = p_bar - p;
    for (int di = 0; di < static_cast<int>(dirs.size()); ++di) {
      const Direction& v = dirs[di];
      for (int pat = 0; pat < static_cast<int>(patterns.size()); ++pat) {
        const Pattern& w = patterns[pat];
        ++out.evaluations;
        const double s0 = p * v.gh / (q * w.gh + model.sigma0_sq());
        double ratio = 1e300;
        double weighted = 0.0;
        bool energy_ok = true;
        for (int k = 0; k < K; ++k) {
          const double sk = p * v.gg[k] / (q * w.gg[k] + model.sigma_sq(k));
          ratio = std::min(ratio, (1.0 + s0) / (1.0 + sk));
          const double e = model.zeta() * (p * v.gg[k] + q * w.gg[k]);
          weighted += model.mu(k) * e;
          if (e < model.e_bar(k)) energy_ok = false;
        }
        double value;
        if (problem == Problem::P1) {
          if (!energy_ok) continue;
          value = ratio;
        } else {
          if (model.r_bar0() > 0.0 && ratio < rate_ratio) continue;
          value = weighted;
        }
        if (!found || value > best) {
          found = true;
          best = value;
          best_dir = di;
          best_pat = pat;
          best_i = i;
        }
      }
    }
  }
  if (!found) throw EmptyFeasibleSet("brute_force_oracle: no feasible grid point");

  const double p = p_bar * best_i / res;
  const double q = p_bar - p;
  const Pattern& w = patterns[best_pat];
  out.solution.method = problem == Problem::P1 ? Method::P1Optimal : Method::P2Optimal;
  out.solution.v0 = std::sqrt(p) * dirs[best_dir].u;
  const CVector& u = dirs[w.dir].u;
  if (q * w.share > 0.0) out.solution.w.emplace_back(std::sqrt(q * w.share) * u);
  if (q * (1.0 - w.share) > 0.0) out.solution.w.emplace_back(std::sqrt(q * (1.0 - w.share)) * orthogonal_of(u));
  const MetricsReport rep = evaluate(model, out.solution);
  out.objective = problem == Problem::P1 ? rep.secrecy_rate : rep.weighted_energy;
  return out;
}

}  // namespace swipt
