#include "swipt/outer_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "swipt/errors.hpp"

namespace swipt {

std::vector<double> search_grid(double lo, double hi, const OuterSearchConfig& cfg) {
  if (!(hi > lo) || lo < 0.0) throw InvalidArgument("search_grid: need 0 <= lo < hi");
  if (cfg.grid_points < 2) throw InvalidArgument("search_grid: need at least 2 grid points");
  const int n = cfg.grid_points;
  std::vector<double> g;
  g.reserve(static_cast<size_t>(n));
  auto logspace = [&](double a, double b, int count) {
    for (int i = 0; i < count; ++i) {
      const double frac = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
      g.push_back(a * std::pow(b / a, frac));
    }
  };
  if (!cfg.log_spaced) {
    for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
  } else if (lo > 0.0) {
    logspace(lo, hi, n);
  } else {
    g.push_back(0.0);
    logspace(1e-6 * hi, hi, n - 1);
  }
  g.back() = hi;
  return g;
}

OuterSearchResult maximize_1d(const std::function<std::optional<double>(double)>& f, double lo, double hi,
                              const OuterSearchConfig& cfg) {
  OuterSearchResult res;
  const std::vector<double> grid = search_grid(lo, hi, cfg);
  res.grid.resize(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) res.grid[i].gamma = grid[i];

  const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(grid.size())));
  if (threads == 1) {
    for (auto& s : res.grid) s.value = f(s.gamma);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (size_t i = next++; i < res.grid.size(); i = next++) res.grid[i].value = f(res.grid[i].gamma);
      });
    }
    for (auto& th : pool) th.join();
  }
  res.evaluations = static_cast<int>(grid.size());

  int best = -1;
  for (size_t i = 0; i < res.grid.size(); ++i) {
    const auto& v = res.grid[i].value;
    if (v && std::isfinite(*v) && (best < 0 || *v > *res.grid[static_cast<size_t>(best)].value)) {
      best = static_cast<int>(i);
    }
  }
  if (best < 0) throw AllGridInfeasible("maximize_1d: no feasible grid point");
  res.gamma_star = res.grid[static_cast<size_t>(best)].gamma;
  res.value = *res.grid[static_cast<size_t>(best)].value;

  const int last = static_cast<int>(grid.size()) - 1;
  double a = grid[static_cast<size_t>(std::max(best - 1, 0))];
  double b = grid[static_cast<size_t>(std::min(best + 1, last))];
  // Golden section in log coordinates when the bracket is positive.
  const bool use_log = cfg.log_spaced && a > 0.0;
  auto to_x = [&](double g) { return use_log ? std::log(g) : g; };
  auto to_g = [&](double x) { return use_log ? std::exp(x) : x; };
  auto value_at = [&](double g) {
    ++res.evaluations;
    const auto v = f(g);
    const double val = (v && std::isfinite(*v)) ? *v : -std::numeric_limits<double>::infinity();
    if (val > res.value) {
      res.value = val;
      res.gamma_star = g;
    }
    return val;
  };
  if (cfg.refine_iters > 0 && b > a) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double xa = to_x(a), xb = to_x(b);
    double xc = xb - invphi * (xb - xa);
    double xd = xa + invphi * (xb - xa);
    double fc = value_at(to_g(xc));
    double fd = value_at(to_g(xd));
    for (int it = 0; it < cfg.refine_iters; ++it) {
      if (fc >= fd) {
        xb = xd;
        xd = xc;
        fd = fc;
        xc = xb - invphi * (xb - xa);
        fc = value_at(to_g(xc));
      } else {
        xa = xc;
        xc = xd;
        fc = fd;
        xd = xa + invphi * (xb - xa);
        fd = value_at(to_g(xd));
      }
    }
  }
  const double span = grid.back() - grid.front();
  res.boundary = std::abs(res.gamma_star - grid.front()) <= 1e-12 * span ||
                 std::abs(res.gamma_star - grid.back()) <= 1e-12 * span;
  return res;
}

}  // namespace swipt
