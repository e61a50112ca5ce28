#include "swipt/bench/config.hpp"

#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "swipt/errors.hpp"

namespace swipt::bench {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <typename T>
T get(const json& obj, const std::string& key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

template <typename T>
void read(const json& obj, const std::string& key, T& out, const std::string& where) {
  if (obj.contains(key)) out = get<T>(obj, key, where);
}

ExperimentKind parse_experiment(const std::string& s) {
  static const std::pair<const char*, ExperimentKind> table[] = {
      {"re_region_p1", ExperimentKind::ReRegionP1},         {"re_region_p2", ExperimentKind::ReRegionP2},
      {"outer_curve_p1", ExperimentKind::OuterCurveP1},     {"outer_curve_p2", ExperimentKind::OuterCurveP2},
      {"er_activation_p1", ExperimentKind::ErActivationP1}, {"er_activation_p2", ExperimentKind::ErActivationP2},
      {"single_solve", ExperimentKind::SingleSolve},        {"oracle_check", ExperimentKind::OracleCheck}};
  for (const auto& [name, kind] : table) {
    if (s == name) return kind;
  }
  throw ConfigError("unknown experiment '" + s + "'");
}

MethodChoice parse_method(const std::string& s) {
  if (s == "optimal") return MethodChoice::Optimal;
  if (s == "sub1") return MethodChoice::Sub1;
  if (s == "sub2") return MethodChoice::Sub2;
  if (s == "nosc") return MethodChoice::NoSC;
  throw ConfigError("unknown method '" + s + "'");
}

void parse_system(const json& j, SystemConfig& s) {
  reject_unknown(j, {"M", "K", "p_bar_dbm", "zeta", "noise_dbm", "weights", "e_bar_w", "r_bar0"}, "system");
  read(j, "M", s.M, "system");
  read(j, "K", s.K, "system");
  read(j, "p_bar_dbm", s.p_bar_dbm, "system");
  read(j, "zeta", s.zeta, "system");
  read(j, "noise_dbm", s.noise_dbm, "system");
  read(j, "weights", s.weights, "system");
  read(j, "e_bar_w", s.e_bar_w, "system");
  read(j, "r_bar0", s.r_bar0, "system");
  if (s.M < 1 || s.K < 1) throw ConfigError("system: M and K must be positive");
  if (!(s.zeta > 0.0 && s.zeta <= 1.0)) throw ConfigError("system.zeta must lie in (0, 1]");
  if (!s.weights.empty() && static_cast<int>(s.weights.size()) != s.K) {
    throw ConfigError("system.weights needs one entry per ER");
  }
  if (s.e_bar_w < 0.0 || s.r_bar0 < 0.0) throw ConfigError("system: targets must be nonnegative");
}

void parse_channel(const json& j, ChannelConfig& c) {
  reject_unknown(j, {"kind", "rho_h_sq_db", "rho_g_sq_db", "phi", "phi_over_pi", "spacing_over_lambda", "seed"},
                 "channel");
  if (j.contains("kind")) {
    const auto kind = get<std::string>(j, "kind", "channel");
    if (kind == "rayleigh") {
      c.kind = ChannelKind::Rayleigh;
    } else if (kind == "ula") {
      c.kind = ChannelKind::Ula;
    } else {
      throw ConfigError("channel.kind must be 'rayleigh' or 'ula'");
    }
  }
  read(j, "rho_h_sq_db", c.rho_h_sq_db, "channel");
  if (j.contains("rho_g_sq_db")) {
    if (j.at("rho_g_sq_db").is_number()) {
      c.rho_g_sq_db = {get<double>(j, "rho_g_sq_db", "channel")};
    } else {
      c.rho_g_sq_db = get<std::vector<double>>(j, "rho_g_sq_db", "channel");
    }
  }
  if (j.contains("phi") && j.contains("phi_over_pi")) throw ConfigError("channel: give phi or phi_over_pi, not both");
  read(j, "phi", c.phi, "channel");
  if (j.contains("phi_over_pi")) {
    c.phi = get<std::vector<double>>(j, "phi_over_pi", "channel");
    for (double& p : c.phi) p *= std::numbers::pi;
  }
  read(j, "spacing_over_lambda", c.spacing_over_lambda, "channel");
  read(j, "seed", c.seed, "channel");
}

void parse_sweep(const json& j, SweepConfig& s) {
  reject_unknown(j, {"n_points", "e_bar_range_w", "r_bar_range"}, "sweep");
  read(j, "n_points", s.n_points, "sweep");
  if (j.contains("e_bar_range_w") && j.contains("r_bar_range")) {
    throw ConfigError("sweep: give e_bar_range_w or r_bar_range, not both");
  }
  for (const char* key : {"e_bar_range_w", "r_bar_range"}) {
    if (!j.contains(key)) continue;
    const auto r = get<std::vector<double>>(j, key, "sweep");
    if (r.size() != 2) throw ConfigError(std::string("sweep.") + key + " needs [lo, hi]");
    s.lo = r[0];
    s.hi = r[1];
  }
  if (s.n_points < 2) throw ConfigError("sweep.n_points must be at least 2");
  if (s.lo < 0.0 || s.hi < s.lo) throw ConfigError("sweep range must be nonnegative and ordered");
}

void parse_search(const json& j, OuterSearchConfig& s) {
  reject_unknown(j, {"grid_points", "gamma_lo", "gamma_hi", "refine_iters", "log_spaced"}, "search");
  read(j, "grid_points", s.grid_points, "search");
  read(j, "gamma_lo", s.gamma_lo, "search");
  read(j, "gamma_hi", s.gamma_hi, "search");
  read(j, "refine_iters", s.refine_iters, "search");
  read(j, "log_spaced", s.log_spaced, "search");
  if (s.grid_points < 2 || s.refine_iters < 0) throw ConfigError("search: grid_points >= 2, refine_iters >= 0");
  if (s.gamma_lo < 0.0 || (s.gamma_hi != 0.0 && s.gamma_hi <= s.gamma_lo)) {
    throw ConfigError("search: need 0 <= gamma_lo < gamma_hi");
  }
}

}  // namespace

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::ReRegionP1: return "re_region_p1";
    case ExperimentKind::ReRegionP2: return "re_region_p2";
    case ExperimentKind::OuterCurveP1: return "outer_curve_p1";
    case ExperimentKind::OuterCurveP2: return "outer_curve_p2";
    case ExperimentKind::ErActivationP1: return "er_activation_p1";
    case ExperimentKind::ErActivationP2: return "er_activation_p2";
    case ExperimentKind::SingleSolve: return "single_solve";
    case ExperimentKind::OracleCheck: return "oracle_check";
  }
  return "unknown";
}

std::string to_string(MethodChoice m) {
  switch (m) {
    case MethodChoice::Optimal: return "optimal";
    case MethodChoice::Sub1: return "sub1";
    case MethodChoice::Sub2: return "sub2";
    case MethodChoice::NoSC: return "nosc";
  }
  return "unknown";
}

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(j, {"experiment", "problem", "system", "channel", "sweep", "methods", "search", "power_search",
                     "realizations", "threads", "oracle_resolution", "output_dir"},
                 "config");
  ExperimentConfig cfg;
  if (!j.contains("experiment")) throw ConfigError("config: 'experiment' is required");
  cfg.experiment = parse_experiment(get<std::string>(j, "experiment", "config"));
  if (j.contains("problem")) {
    const auto p = get<std::string>(j, "problem", "config");
    if (p == "p1") {
      cfg.problem = Problem::P1;
    } else if (p == "p2") {
      cfg.problem = Problem::P2;
    } else {
      throw ConfigError("config.problem must be 'p1' or 'p2'");
    }
  }
  if (j.contains("system")) parse_system(j.at("system"), cfg.system);
  if (j.contains("channel")) parse_channel(j.at("channel"), cfg.channel);
  if (cfg.channel.rho_g_sq_db.empty()) cfg.channel.rho_g_sq_db = {-30.0};
  if (j.contains("sweep")) parse_sweep(j.at("sweep"), cfg.sweep);
  if (j.contains("methods")) {
    cfg.methods.clear();
    for (const auto& m : get<std::vector<std::string>>(j, "methods", "config")) cfg.methods.push_back(parse_method(m));
    if (cfg.methods.empty()) throw ConfigError("config.methods must not be empty");
  }
  if (j.contains("search")) parse_search(j.at("search"), cfg.search);
  if (j.contains("power_search")) {
    const json& p = j.at("power_search");
    reject_unknown(p, {"grid_points", "bisection_tol"}, "power_search");
    read(p, "grid_points", cfg.power_search.grid_points, "power_search");
    read(p, "bisection_tol", cfg.power_search.bisection_tol, "power_search");
    if (cfg.power_search.grid_points < 2 || cfg.power_search.bisection_tol < 0.0) {
      throw ConfigError("power_search: grid_points >= 2 and bisection_tol >= 0");
    }
  }
  read(j, "realizations", cfg.realizations, "config");
  read(j, "threads", cfg.threads, "config");
  read(j, "oracle_resolution", cfg.oracle_resolution, "config");
  if (j.contains("output_dir")) cfg.output_dir = get<std::string>(j, "output_dir", "config");
  if (cfg.realizations < 1) throw ConfigError("config.realizations must be at least 1");
  if (cfg.threads < 1) throw ConfigError("config.threads must be at least 1");
  if (cfg.oracle_resolution < 2) throw ConfigError("config.oracle_resolution must be at least 2");
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

SystemModel build_model(const ExperimentConfig& cfg, int realization) {
  const SystemConfig& s = cfg.system;
  ChannelDraw draw;
  try {
    draw = generate_channels(cfg.channel, s.M, s.K, static_cast<std::uint64_t>(realization));
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("channel: ") + e.what());
  } catch (const LinearDependence& e) {
    throw ConfigError(std::string("channel: ") + e.what());
  }
  SystemSpec spec;
  spec.h = draw.h;
  spec.g = draw.g;
  spec.sigma0_sq = dbm_to_watts(s.noise_dbm);
  spec.p_bar = dbm_to_watts(s.p_bar_dbm);
  spec.zeta = s.zeta;
  spec.mu = s.weights;
  spec.e_bar = std::vector<double>(static_cast<size_t>(s.K), s.e_bar_w);
  spec.r_bar0 = s.r_bar0;
  try {
    return SystemModel(spec);
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("system: ") + e.what());
  }
}

}  // namespace swipt::bench
