// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
// Usage: swipt_acceptance <configs dir> <swipt-bench path> <scratch dir>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "swipt/bench/config.hpp"
#include "swipt/bench/runner.hpp"
#include "swipt/errors.hpp"
#include "swipt/linalg.hpp"
#include "swipt/metrics.hpp"
#include "swipt/oracle.hpp"
#include "swipt/p1.hpp"
#include "swipt/p2.hpp"
#include "swipt/sdr.hpp"
#include "swipt/suboptimal.hpp"

namespace fs = std::filesystem;

namespace swipt::acceptance {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Paths {
  fs::path configs;
  fs::path bench;
  fs::path scratch;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

CVector random_vector(Rng& rng, int n, double variance = 1.0) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.cscg(variance);
  return v;
}

HermitianMatrix random_psd(Rng& rng, int n, int rank) {
  CMatrix a(n, rank);
  for (int j = 0; j < rank; ++j) a.col(j) = random_vector(rng, n);
  return HermitianMatrix(a * a.adjoint());
}

double min_eig(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// M = 2, K = 1 instance i of the oracle set; every fourth one has g orthogonal to h.
SystemModel oracle_instance(int i) {
  Rng rng(1000 + static_cast<std::uint64_t>(i));
  SystemSpec s;
  s.h = random_vector(rng, 2);
  CVector g = random_vector(rng, 2);
  if (i % 4 == 0) g -= s.h * (s.h.dot(g) / s.h.squaredNorm());
  s.g = {g};
  s.sigma0_sq = 1.0;
  s.p_bar = 10.0;
  s.zeta = 0.5;
  s.e_bar = {0.3 * s.zeta * s.p_bar * g.squaredNorm()};
  return SystemModel(s);
}

Outcome oracle_agreement(const Paths&) {
  const auto t0 = Clock::now();
  Outcome out;
  double worst = 0.0;
  int compared = 0;
  for (int i = 0; i < 20; ++i) {
    const SystemModel m1 = oracle_instance(i);
    const double r1 = solve_p1(m1).rate;
    const double o1 = brute_force_oracle(m1, Problem::P1, 60).objective;

    const double noet = solve_p1_noet(m1).rate;
    const SystemModel m2 = m1.with_uniform_energy_target(0.0).with_rate_target(0.5 * noet);
    const double r2 = solve_p2(m2).energy;
    const double o2 = brute_force_oracle(m2, Problem::P2, 60).objective;

    for (auto [solver, oracle] : {std::pair{r1, o1}, std::pair{r2, o2}}) {
      const double rel = std::abs(solver - oracle) / std::max(std::abs(oracle), 1e-12);
      worst = std::max(worst, rel);
      ++compared;
    }
  }
  const double elapsed = seconds_since(t0);
  out.pass = worst <= 0.02 && elapsed < 120.0;
  out.detail = std::to_string(compared) + " objectives, worst rel diff " + fmt(worst) + ", " + fmt(elapsed) + " s";
  return out;
}

// Power needed for rate r along the projection of h onto the null space of
// the ER channels, using modified Gram-Schmidt on the ER channels.
double null_space_info_power(const SystemModel& m) {
  std::vector<CVector> basis;
  for (int k = 0; k < m.K(); ++k) {
    CVector v = m.g(k);
    for (const CVector& b : basis) v -= b * b.dot(v);
    basis.emplace_back(v / v.norm());
  }
  CVector h = m.h();
  for (const CVector& b : basis) h -= b * b.dot(h);
  return (std::exp2(m.r_bar0()) - 1.0) * m.sigma0_sq() / h.squaredNorm();
}

Outcome closed_forms(const Paths&) {
  Outcome out;
  double emax_err = 0.0, sub1_err = 0.0, p2_err = 0.0;
  for (int i = 0; i < 10; ++i) {
    const SystemModel m = testing::rayleigh_instance(4, 3, 100 + static_cast<std::uint64_t>(i), 0.0, 2.0);

    CMatrix w = CMatrix::Zero(4, 4);
    for (int k = 0; k < m.K(); ++k) w += m.mu(k) * m.zeta() * m.g(k) * m.g(k).adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(w);
    const double psi = es.eigenvalues().maxCoeff();
    const EMaxResult e = e_max_noit(m);
    const double expected = psi * m.p_bar();
    emax_err = std::max(emax_err, std::abs(e.energy - expected) / expected);
    emax_err = std::max(emax_err, std::abs(evaluate(m, e.solution).weighted_energy - expected) / expected);

    const double p0 = p2_sub1_info_power(m);
    const double p0_expected = null_space_info_power(m);
    sub1_err = std::max(sub1_err, std::abs(p0 - p0_expected) / p0_expected);

    const double energy = solve_p2(m.with_rate_target(0.0)).energy;
    p2_err = std::max(p2_err, std::abs(energy - expected) / expected);
  }
  out.pass = emax_err <= 1e-12 && sub1_err <= 1e-10 && p2_err <= 1e-4;
  out.detail = "e_max rel err " + fmt(emax_err) + ", sub1 power rel err " + fmt(sub1_err) +
               ", P2 at zero rate rel err " + fmt(p2_err);
  return out;
}

Outcome reconstruction(const Paths&) {
  Outcome out;
  Rng rng(2024);
  double worst = 0.0;
  int rank_failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int M = 2 + trial % 5;
    const int K = 3;
    const int rank_s = 1 + static_cast<int>(rng.uniform() * M);
    const HermitianMatrix S = random_psd(rng, M, std::min(rank_s, M));
    const HermitianMatrix Q = random_psd(rng, M, 1 + trial % M);
    const CVector h = random_vector(rng, M);
    const CovariancePair r = reconstruct_rank_one(S, Q, h, 1e-12);
    const double scale = S.trace() + Q.trace();
    const HermitianMatrix H = HermitianMatrix::OuterProduct(h);

    if (linalg::numerical_rank(r.S, 1e-9, scale) != 1) ++rank_failures;
    double e = std::abs(r.S.trace_product(H) - S.trace_product(H)) / std::max(S.trace_product(H), 1e-300);
    e = std::max(e, -min_eig(S - r.S) / scale);
    e = std::max(e, -min_eig(r.Q) / scale);
    e = std::max(e, std::abs(r.S.trace() + r.Q.trace() - scale) / scale);
    for (int k = 0; k < K; ++k) {
      const CVector g = random_vector(rng, M);
      const HermitianMatrix G = HermitianMatrix::OuterProduct(g);
      const double gscale = scale * g.squaredNorm();
      e = std::max(e, (r.S.trace_product(G) - S.trace_product(G)) / gscale);
      e = std::max(e, std::abs((r.S + r.Q).trace_product(G) - (S + Q).trace_product(G)) / gscale);
    }
    worst = std::max(worst, e);
  }

  // Inner solves over a regression set of Rayleigh instances.
  int solves = 0, high_rank = 0;
  double worst_violation = 0.0;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const SystemModel m = testing::rayleigh_instance(4, 3, seed, 2e-4, 2.0);
    const auto [lo1, hi1] = p1_gamma_interval(m);
    for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      try {
        const G1Result r = g1(m, lo1 * std::pow(hi1 / lo1, frac));
        ++solves;
        if (r.raw_rank_S > 1) ++high_rank;
        worst_violation = std::max(worst_violation, r.max_violation);
      } catch (const Error&) {
      }
    }
    const auto [lo2, hi2] = p2_gamma_interval(m);
    if (!(hi2 > lo2)) continue;
    for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      try {
        const G2Result r = g2(m, lo2 * std::pow(hi2 / lo2, frac));
        ++solves;
        if (r.raw_rank_S > 1) ++high_rank;
        worst_violation = std::max(worst_violation, r.max_violation);
      } catch (const Error&) {
      }
    }
  }
  out.pass = worst <= 1e-9 && rank_failures == 0 && worst_violation <= 1e-6 && solves > 0;
  out.detail = "200 triples worst rel err " + fmt(worst) + ", rank failures " + std::to_string(rank_failures) +
               "; " + std::to_string(solves) + " inner solves (" + std::to_string(high_rank) +
               " with rank(S) > 1), worst violation " + fmt(worst_violation);
  return out;
}

Outcome duality(const Paths&) {
  Outcome out;
  int solves = 0, failures = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SystemModel m = testing::rayleigh_instance(4, 3, seed, 1e-4);
    const double gamma_e = 0.5;
    const SdrSolveResult r = solve_p11_sdr_eqv(m, gamma_e);
    ++solves;
    if (!r.ok() || !r.duals) {
      ++failures;
      continue;
    }
    const RankOneReport rep = rank_one_diagnostics(r, m, gamma_e);
    const double rel = std::abs(r.duals->lambda - r.objective) / std::max(std::abs(r.objective), 1e-300);
    worst = std::max(worst, rel);
    if (rel > 1e-6 || !(r.duals->theta > 0.0) || !rep.rank_Q_bounded) ++failures;
  }
  out.pass = failures == 0;
  out.detail = std::to_string(solves) + " solves, " + std::to_string(failures) + " failures, worst lambda rel err " +
               fmt(worst);
  return out;
}

bool dominates(const bench::PointResult& opt, const bench::PointResult& sub, bool energy) {
  if (sub.status != bench::PointStatus::Ok) return true;
  if (opt.status != bench::PointStatus::Ok) return false;
  if (energy) return opt.energy >= sub.energy - 1e-6 * std::abs(sub.energy);
  return opt.rate >= sub.rate - 1e-6;
}

Outcome dominance(const Paths& paths) {
  const auto t0 = Clock::now();
  Outcome out;
  int compared = 0, violations = 0;
  double worst_cos = 0.0;
  for (const char* name : {"re_region_p1.json", "re_region_p2.json"}) {
    const bench::ExperimentConfig cfg = bench::load_config(paths.configs / name);
    const bool p2 = cfg.experiment == bench::ExperimentKind::ReRegionP2;
    const bench::RunOutput run = p2 ? bench::run_re_region_p2(cfg) : bench::run_re_region_p1(cfg);
    const SystemModel model = bench::build_model(cfg, 0);
    std::vector<const bench::PointResult*> optimal;
    for (const auto& p : run.points) {
      if (p.method == bench::MethodChoice::Optimal) optimal.push_back(&p);
    }
    for (const auto& p : run.points) {
      if (p.method != bench::MethodChoice::Sub1 && p.method != bench::MethodChoice::Sub2) continue;
      const auto it = std::find_if(optimal.begin(), optimal.end(), [&](const auto* o) { return o->x == p.x; });
      if (it == optimal.end()) {
        ++violations;
        continue;
      }
      ++compared;
      if (!dominates(**it, p, p2)) ++violations;
      if (p.method == bench::MethodChoice::Sub1 && p.status == bench::PointStatus::Ok && p.solution) {
        const CVector& v0 = p.solution->v0;
        if (v0.norm() == 0.0) continue;
        for (int k = 0; k < model.K(); ++k) {
          worst_cos = std::max(worst_cos, std::abs(v0.dot(model.g(k))) / (v0.norm() * model.g(k).norm()));
        }
      }
    }
  }
  const double elapsed = seconds_since(t0);
  out.pass = violations == 0 && compared > 0 && worst_cos <= 1e-8 && elapsed < 600.0;
  out.detail = std::to_string(compared) + " comparisons, " + std::to_string(violations) +
               " dominance violations, worst sub1 |cos(v0, g_k)| " + fmt(worst_cos) + ", " + fmt(elapsed) + " s";
  return out;
}

// log2 of the largest generalized eigenvalue of (I + h h^H / s0, I + g g^H / sk):
// the secrecy capacity against a single eavesdropper with unlimited power.
double single_er_secrecy_capacity(const SystemModel& m, int k) {
  const int M = m.M();
  const CMatrix A = CMatrix::Identity(M, M) + m.h() * m.h().adjoint() * (m.p_bar() / m.sigma0_sq());
  const CMatrix B = CMatrix::Identity(M, M) + m.g(k) * m.g(k).adjoint() * (m.p_bar() / m.sigma_sq(k));
  const Eigen::LLT<CMatrix> llt(B);
  const CMatrix Linv = CMatrix(llt.matrixL()).inverse();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(Linv * A * Linv.adjoint(), Eigen::EigenvaluesOnly);
  return std::log2(es.eigenvalues().maxCoeff());
}

Outcome er_activation(const Paths& paths) {
  Outcome out;
  std::ostringstream why;
  const bench::ExperimentConfig c1 = bench::load_config(paths.configs / "er_activation_p1.json");
  const bench::ExperimentConfig c2 = bench::load_config(paths.configs / "er_activation_p2.json");
  const bench::RunOutput r1 = bench::run_er_activation(c1, Problem::P1);
  const bench::RunOutput r2 = bench::run_er_activation(c2, Problem::P2);

  bool subs_collapse = true, sub_p2_infeasible = true, p1_positive = true, p2_monotone = true;
  double prev_energy = -1.0;
  int first_drop = 0;
  for (const auto& p : r1.points) {
    const int k = static_cast<int>(p.x);
    if (p.method == bench::MethodChoice::Optimal && !(p.status == bench::PointStatus::Ok && p.rate > 0.0)) {
      p1_positive = false;
    }
    if (p.method != bench::MethodChoice::Optimal && k >= 5 && p.rate >= 0.05) subs_collapse = false;
  }
  for (const auto& p : r2.points) {
    const int k = static_cast<int>(p.x);
    if (p.method != bench::MethodChoice::Optimal && k >= 5 &&
        (p.status != bench::PointStatus::Infeasible || p.energy != 0.0)) {
      sub_p2_infeasible = false;
    }
    if (p.method == bench::MethodChoice::Optimal) {
      const double e = p.status == bench::PointStatus::Ok ? p.energy : 0.0;
      if (e < prev_energy && p2_monotone) {
        p2_monotone = false;
        first_drop = k;
      }
      prev_energy = e;
    }
  }
  out.pass = subs_collapse && sub_p2_infeasible && p1_positive && p2_monotone;
  why << "subs below 0.05 from K'=5: " << (subs_collapse ? "yes" : "no")
      << "; P2 subs infeasible from K'=5: " << (sub_p2_infeasible ? "yes" : "no")
      << "; optimal P1 > 0: " << (p1_positive ? "yes" : "no")
      << "; optimal P2 nondecreasing: " << (p2_monotone ? "yes" : "no");
  if (!p2_monotone) {
    const SystemModel m = bench::build_model(c2, 0);
    why << " (optimal P2 infeasible from K'=" << first_drop << "; secrecy capacity against ER5 alone is "
        << fmt(single_er_secrecy_capacity(m, 4)) << " bps/Hz < r_bar0 = " << fmt(m.r_bar0()) << ")";
  }
  out.detail = why.str();
  return out;
}

Outcome nosc_structure(const Paths&) {
  Outcome out;
  double worst = 0.0, worst_raw = 0.0, worst_energy = 0.0;
  int solved = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const SystemModel m = testing::rayleigh_instance(4, 3, seed);
    const double r = 0.5 * std::log2(1.0 + m.p_bar() * m.h().squaredNorm() / m.sigma0_sq());
    const P2Result res = solve_p2_nosc(m, r);
    double beams = 0.0;
    for (const CVector& w : res.solution.w) beams += w.squaredNorm();
    worst = std::max({worst, res.inner.solution.Q.trace() / m.p_bar(), beams / m.p_bar()});
    worst_raw = std::max(worst_raw, res.inner.raw.primal.Q.trace() / m.p_bar());
    // The returned beams must keep the relaxed optimum's energy.
    worst_energy = std::max(worst_energy, std::abs(res.energy - res.inner.raw.objective) / res.inner.raw.objective);
    ++solved;
  }
  out.pass = worst <= 1e-6 && worst_energy <= 1e-6;
  out.detail = std::to_string(solved) + " instances, worst Tr(Q)/P " + fmt(worst) + " (relaxed solver output " +
               fmt(worst_raw) + "), worst energy change vs relaxed optimum " + fmt(worst_energy);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism(const Paths& paths) {
  Outcome out;
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"solve-p1", "solve_p1.json"},           {"solve-p2", "solve_p2.json"},
      {"re-region", "re_region_p1.json"},      {"re-region", "re_region_p2.json"},
      {"outer-curve", "outer_curve_p1.json"},  {"outer-curve", "outer_curve_p2.json"},
      {"er-activation", "er_activation_p1.json"}, {"er-activation", "er_activation_p2.json"},
      {"oracle-check", "oracle_check.json"}};
  int files = 0, mismatches = 0, failed_runs = 0;
  for (const auto& [cmd, cfg] : runs) {
    std::vector<fs::path> dirs;
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path dir = paths.scratch / (fs::path(cfg).stem().string() + "_" + std::to_string(rep));
      fs::remove_all(dir);
      const std::string line = "\"" + paths.bench.string() + "\" " + cmd + " --config \"" +
                               (paths.configs / cfg).string() + "\" --out \"" + dir.string() + "\" > /dev/null 2>&1";
      if (std::system(line.c_str()) != 0) ++failed_runs;
      dirs.push_back(dir);
    }
    if (!fs::exists(dirs[0])) continue;
    for (const auto& entry : fs::directory_iterator(dirs[0])) {
      if (entry.path().extension() != ".csv") continue;
      ++files;
      if (slurp(entry.path()) != slurp(dirs[1] / entry.path().filename())) ++mismatches;
    }
  }
  out.pass = failed_runs == 0 && mismatches == 0 && files >= static_cast<int>(runs.size());
  out.detail = std::to_string(runs.size()) + " experiments run twice, " + std::to_string(files) + " CSV files, " +
               std::to_string(mismatches) + " differ, " + std::to_string(failed_runs) + " nonzero exits";
  return out;
}

}  // namespace swipt::acceptance

int main(int argc, char** argv) {
  using namespace swipt::acceptance;
  if (argc != 4) {
    std::cerr << "usage: " << argv[0] << " <configs dir> <swipt-bench> <scratch dir>\n";
    return 2;
  }
  const Paths paths{argv[1], argv[2], argv[3]};
  fs::create_directories(paths.scratch);

  const std::vector<std::pair<std::string, std::function<Outcome(const Paths&)>>> criteria = {
      {"oracle agreement", oracle_agreement},
      {"closed forms", closed_forms},
      {"rank-one reconstruction", reconstruction},
      {"duality", duality},
      {"dominance and structure", dominance},
      {"ER activation", er_activation},
      {"NoSC structure", nosc_structure},
      {"determinism", determinism},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second(paths);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
