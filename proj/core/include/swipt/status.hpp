#pragma once

#include <string>

namespace swipt {

enum class SolveStatus { Optimal, Infeasible, Unbounded, NumericalTrouble };

inline std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::NumericalTrouble: return "numerical_trouble";
  }
  return "unknown";
}

}  // namespace swipt
