#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace swipt {

/// One-dimensional search settings. gamma_lo = gamma_hi = 0 selects the
/// problem's default interval.
struct OuterSearchConfig {
  int grid_points = 100;
  double gamma_lo = 0.0;
  double gamma_hi = 0.0;
  int refine_iters = 40;
  bool log_spaced = true;
  /// Worker threads for grid evaluation; 1 evaluates in order.
  int threads = 1;
};

struct OuterSample {
  double gamma = 0.0;
  std::optional<double> value;  // empty: infeasible or failed at this point
};

struct OuterSearchResult {
  double gamma_star = 0.0;
  double value = 0.0;
  /// Maximizer sits at an end of the search interval.
  bool boundary = false;
  std::vector<OuterSample> grid;
  int evaluations = 0;
};

/// Grid over [lo, hi] (log spaced when requested and lo > 0; with lo = 0 the
/// grid is {0} followed by a log grid on [1e-6 hi, hi]), then golden-section
/// refinement on the bracket around the best grid point. Points where f has
/// no value are skipped. Throws AllGridInfeasible if no grid point has a value.
OuterSearchResult maximize_1d(const std::function<std::optional<double>(double)>& f, double lo, double hi,
                              const OuterSearchConfig& cfg);

/// Grid used by maximize_1d.
std::vector<double> search_grid(double lo, double hi, const OuterSearchConfig& cfg);

}  // namespace swipt
