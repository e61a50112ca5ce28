#include "swipt/bench/runner.hpp"

#include <cmath>
#include <map>

#include "swipt/errors.hpp"
#include "swipt/metrics.hpp"
#include "swipt/oracle.hpp"
#include "swipt/p1.hpp"
#include "swipt/p2.hpp"
#include "swipt/suboptimal.hpp"

namespace swipt::bench {

namespace {

template <typename Solve>
PointResult guarded(Solve&& solve) {
  PointResult r;
  try {
    solve(r);
  } catch (const Infeasible& e) {
    r.status = PointStatus::Infeasible;
    r.detail = e.what();
  } catch (const NullSpaceUnavailable& e) {
    r.status = PointStatus::Infeasible;
    r.detail = e.what();
  } catch (const DegenerateInput& e) {
    r.status = PointStatus::Infeasible;
    r.detail = e.what();
  } catch (const NumericalTrouble& e) {
    r.status = PointStatus::NumericalTrouble;
    r.detail = e.what();
  }
  if (r.status != PointStatus::Ok) {
    r.rate = 0.0;
    r.energy = 0.0;
    r.gamma_star.reset();
    r.solution.reset();
  }
  return r;
}

void fill_p1(PointResult& r, const SystemModel& model, const BeamformingSolution& sol) {
  const MetricsReport rep = evaluate(model, sol);
  r.rate = r.method == MethodChoice::NoSC ? std::log2(1.0 + rep.sinr0) : rep.secrecy_rate;
  r.energy = rep.min_energy();
  r.solution = sol;
}

void fill_p2(PointResult& r, const SystemModel& model, const BeamformingSolution& sol) {
  const MetricsReport rep = evaluate(model, sol);
  r.rate = r.method == MethodChoice::NoSC ? std::log2(1.0 + rep.sinr0) : rep.secrecy_rate;
  r.energy = rep.weighted_energy;
  r.solution = sol;
}

// Mean over realizations of rows sharing (x, method); failed rows count as 0.
std::vector<PointResult> summarize(const std::vector<PointResult>& points, int realizations) {
  if (realizations == 1) return points;
  std::vector<PointResult> out;
  const size_t per = points.size() / static_cast<size_t>(realizations);
  for (size_t i = 0; i < per; ++i) {
    PointResult s = points[i];
    s.realization = -1;
    s.solution.reset();
    s.detail.clear();
    s.gamma_star.reset();
    s.rate = s.energy = 0.0;
    int ok = 0, trouble = 0;
    for (int r = 0; r < realizations; ++r) {
      const PointResult& p = points[static_cast<size_t>(r) * per + i];
      s.rate += p.rate / realizations;
      s.energy += p.energy / realizations;
      ok += p.status == PointStatus::Ok;
      trouble += p.status == PointStatus::NumericalTrouble;
    }
    s.status = trouble > 0          ? PointStatus::NumericalTrouble
               : ok == realizations ? PointStatus::Ok
               : ok == 0            ? PointStatus::Infeasible
                                    : PointStatus::Partial;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SystemModel> build_models(const ExperimentConfig& cfg) {
  std::vector<SystemModel> models;
  for (int r = 0; r < cfg.realizations; ++r) models.push_back(build_model(cfg, r));
  return models;
}

using Solver = PointResult (*)(const SystemModel&, MethodChoice, const ExperimentConfig&, const SdrOptions&);

RunOutput run_grid(const ExperimentConfig& cfg, const std::vector<double>& xs,
                   const std::function<SystemModel(const SystemModel&, double)>& adapt, Solver solver,
                   const SdrOptions& opts) {
  const std::vector<SystemModel> models = build_models(cfg);
  std::vector<std::function<PointResult()>> tasks;
  for (int r = 0; r < cfg.realizations; ++r) {
    for (double x : xs) {
      for (MethodChoice m : cfg.methods) {
        tasks.emplace_back([&, r, x, m] {
          PointResult p = solver(adapt(models[static_cast<size_t>(r)], x), m, cfg, opts);
          p.x = x;
          p.realization = r;
          return p;
        });
      }
    }
  }
  RunOutput out;
  out.points = run_ordered(tasks, cfg.threads);
  out.summary = summarize(out.points, cfg.realizations);
  return out;
}

// Number of strict local maxima along the feasible samples.
int count_peaks(const std::vector<CurveSample>& curve) {
  std::vector<double> v;
  for (const auto& s : curve) {
    if (s.value && !s.maximizer) v.push_back(*s.value);
  }
  int peaks = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    const double scale = 1e-9 * std::max(1.0, std::abs(v[i]));
    const bool left = i == 0 || v[i] > v[i - 1] + scale;
    const bool right = i + 1 == v.size() || v[i] > v[i + 1] + scale;
    if (left && right) ++peaks;
  }
  return peaks;
}

}  // namespace

std::string to_string(PointStatus s) {
  switch (s) {
    case PointStatus::Ok: return "ok";
    case PointStatus::Infeasible: return "infeasible";
    case PointStatus::NumericalTrouble: return "numerical_trouble";
    case PointStatus::Partial: return "partial";
  }
  return "unknown";
}

bool RunOutput::numerical_trouble() const {
  for (const auto& p : points) {
    if (p.status == PointStatus::NumericalTrouble) return true;
  }
  for (const auto& o : oracle) {
    if (o.status == "numerical_trouble") return true;
  }
  return false;
}

PointResult solve_p1_method(const SystemModel& model, MethodChoice method, const ExperimentConfig& cfg,
                            const SdrOptions& opts) {
  PointResult out = guarded([&](PointResult& r) {
    r.method = method;
    switch (method) {
      case MethodChoice::Optimal: {
        try {
          const P1Result p = solve_p1(model, cfg.search, opts);
          r.gamma_star = p.gamma_e_star;
          fill_p1(r, model, p.solution);
        } catch (const AllGridInfeasible&) {
          // The energy targets leave nothing for secrecy: rate 0 with the
          // minimum-power energy beams.
          const SdrSolveResult noit = solve_p1_noit(model, opts);
          if (!noit.ok()) throw NumericalTrouble("solve_p1: fallback minimum-power solve failed");
          BeamformingSolution sol;
          sol.method = Method::NoIT;
          sol.v0 = CVector::Zero(model.M());
          sol.w = energy_beams(noit.primal.Q, 1e-12, model.p_bar());
          fill_p1(r, model, sol);
        }
        break;
      }
      case MethodChoice::Sub1: fill_p1(r, model, p1_sub1(model, opts).solution); break;
      case MethodChoice::Sub2: fill_p1(r, model, p1_sub2(model, cfg.power_search, opts).solution); break;
      case MethodChoice::NoSC: fill_p1(r, model, solve_p1_nosc(model, opts).solution); break;
    }
  });
  out.method = method;
  return out;
}

PointResult solve_p2_method(const SystemModel& model, MethodChoice method, const ExperimentConfig& cfg,
                            const SdrOptions& opts) {
  PointResult out = guarded([&](PointResult& r) {
    r.method = method;
    switch (method) {
      case MethodChoice::Optimal: {
        const P2Result p = solve_p2(model, cfg.search, opts);
        r.gamma_star = p.gamma_0_star;
        fill_p2(r, model, p.solution);
        break;
      }
      case MethodChoice::Sub1: fill_p2(r, model, p2_sub1(model).solution); break;
      case MethodChoice::Sub2: fill_p2(r, model, p2_sub2(model, cfg.power_search).solution); break;
      case MethodChoice::NoSC: fill_p2(r, model, solve_p2_nosc(model, model.r_bar0(), opts).solution); break;
    }
  });
  out.method = method;
  return out;
}

std::vector<double> sweep_values(const SweepConfig& sweep) {
  std::vector<double> xs;
  for (int i = 0; i < sweep.n_points; ++i) xs.push_back(sweep.lo + (sweep.hi - sweep.lo) * i / (sweep.n_points - 1));
  return xs;
}

RunOutput run_re_region_p1(const ExperimentConfig& cfg, const SdrOptions& opts) {
  RunOutput out = run_grid(
      cfg, sweep_values(cfg.sweep), [](const SystemModel& m, double e) { return m.with_uniform_energy_target(e); },
      &solve_p1_method, opts);
  out.kind = ExperimentKind::ReRegionP1;
  return out;
}

RunOutput run_re_region_p2(const ExperimentConfig& cfg, const SdrOptions& opts) {
  RunOutput out = run_grid(
      cfg, sweep_values(cfg.sweep), [](const SystemModel& m, double r) { return m.with_rate_target(r); },
      &solve_p2_method, opts);
  out.kind = ExperimentKind::ReRegionP2;
  return out;
}

RunOutput run_er_activation(const ExperimentConfig& cfg, Problem problem, const SdrOptions& opts) {
  std::vector<double> ks;
  for (int k = 1; k <= cfg.system.K; ++k) ks.push_back(k);
  RunOutput out = run_grid(
      cfg, ks, [](const SystemModel& m, double k) { return m.with_first_ers(static_cast<int>(k)); },
      problem == Problem::P1 ? &solve_p1_method : &solve_p2_method, opts);
  out.kind = problem == Problem::P1 ? ExperimentKind::ErActivationP1 : ExperimentKind::ErActivationP2;
  return out;
}

RunOutput run_outer_curve(const ExperimentConfig& cfg, Problem problem, const SdrOptions& opts) {
  RunOutput out;
  out.kind = problem == Problem::P1 ? ExperimentKind::OuterCurveP1 : ExperimentKind::OuterCurveP2;
  if (cfg.realizations > 1) out.warnings.push_back("outer curves use realization 0 only");
  OuterSearchConfig search = cfg.search;
  search.threads = cfg.threads;
  const SystemModel model = build_model(cfg, 0);
  double gamma_star = 0.0, value = 0.0;
  std::vector<OuterSample> grid;
  try {
    if (problem == Problem::P1) {
      const P1Result r = solve_p1(model, search, opts);
      gamma_star = r.gamma_e_star;
      value = r.outer_value;
      grid = r.curve;
    } else {
      const P2Result r = solve_p2(model, search, opts);
      gamma_star = r.gamma_0_star;
      value = r.inner.value;
      grid = r.curve;
    }
  } catch (const Infeasible& e) {
    out.warnings.push_back(std::string("outer curve not available: ") + e.what());
    return out;
  } catch (const NumericalTrouble& e) {
    out.warnings.push_back(std::string("outer curve failed: ") + e.what());
    PointResult marker;
    marker.status = PointStatus::NumericalTrouble;
    out.points.push_back(marker);
    return out;
  }
  for (const auto& s : grid) out.curve.push_back({s.gamma, s.value, false});
  out.curve.push_back({gamma_star, value, true});
  if (!out.curve.front().value) out.warnings.push_back("outer objective infeasible at the lower interval end");
  if (!out.curve[out.curve.size() - 2].value) out.warnings.push_back("outer objective infeasible at the upper interval end");
  if (count_peaks(out.curve) > 1) out.warnings.push_back("outer objective has more than one local maximum on the grid");
  return out;
}

RunOutput run_single_solve(const ExperimentConfig& cfg, const SdrOptions& opts) {
  const double x = cfg.problem == Problem::P1 ? cfg.system.e_bar_w : cfg.system.r_bar0;
  RunOutput out = run_grid(
      cfg, {x}, [](const SystemModel& m, double) { return m; },
      cfg.problem == Problem::P1 ? &solve_p1_method : &solve_p2_method, opts);
  out.kind = ExperimentKind::SingleSolve;
  return out;
}

RunOutput run_oracle_check(const ExperimentConfig& cfg, const SdrOptions& opts) {
  if (cfg.system.M != 2 || cfg.system.K > 2) throw ConfigError("oracle_check needs system.M = 2 and K <= 2");
  const std::vector<SystemModel> models = build_models(cfg);
  std::vector<std::function<OracleRow()>> tasks;
  for (int r = 0; r < cfg.realizations; ++r) {
    for (Problem problem : {Problem::P1, Problem::P2}) {
      tasks.emplace_back([&, r, problem] {
        const SystemModel& m = models[static_cast<size_t>(r)];
        OracleRow row;
        row.realization = r;
        row.problem = problem;
        try {
          row.solver = problem == Problem::P1 ? solve_p1(m, cfg.search, opts).rate : solve_p2(m, cfg.search, opts).energy;
        } catch (const Infeasible&) {
        } catch (const NumericalTrouble&) {
          row.status = "numerical_trouble";
          return row;
        }
        try {
          row.oracle = brute_force_oracle(m, problem, cfg.oracle_resolution).objective;
        } catch (const Infeasible&) {
        }
        if (!row.solver && !row.oracle) {
          row.status = "infeasible_both";
        } else if (row.solver && row.oracle) {
          const double scale = std::max(std::abs(*row.solver), 1e-12);
          row.rel_diff = (*row.solver - *row.oracle) / scale;
          row.status = std::abs(row.rel_diff) <= 0.02 ? "ok" : "mismatch";
        } else {
          row.status = "mismatch";
        }
        return row;
      });
    }
  }
  RunOutput out;
  out.kind = ExperimentKind::OracleCheck;
  out.oracle = run_ordered(tasks, cfg.threads);
  return out;
}

RunOutput run_experiment(const ExperimentConfig& cfg, const SdrOptions& opts) {
  switch (cfg.experiment) {
    case ExperimentKind::ReRegionP1: return run_re_region_p1(cfg, opts);
    case ExperimentKind::ReRegionP2: return run_re_region_p2(cfg, opts);
    case ExperimentKind::OuterCurveP1: return run_outer_curve(cfg, Problem::P1, opts);
    case ExperimentKind::OuterCurveP2: return run_outer_curve(cfg, Problem::P2, opts);
    case ExperimentKind::ErActivationP1: return run_er_activation(cfg, Problem::P1, opts);
    case ExperimentKind::ErActivationP2: return run_er_activation(cfg, Problem::P2, opts);
    case ExperimentKind::SingleSolve: return run_single_solve(cfg, opts);
    case ExperimentKind::OracleCheck: return run_oracle_check(cfg, opts);
  }
  throw ConfigError("unknown experiment");
}

}  // namespace swipt::bench
