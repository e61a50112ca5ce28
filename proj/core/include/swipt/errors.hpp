#pragma once

#include <stdexcept>
#include <string>

namespace swipt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Hermitian input whose asymmetry exceeds the accepted tolerance.
class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// Channel vectors fail the pairwise linear-independence assumption.
class LinearDependence : public Error {
 public:
  using Error::Error;
};

/// Information covariance is not rank one; run rank-one reconstruction first.
class RankOneViolation : public Error {
 public:
  using Error::Error;
};

class EmptyNullSpace : public Error {
 public:
  using Error::Error;
};

/// Null-space based designs need K < M.
class NullSpaceUnavailable : public Error {
 public:
  using Error::Error;
};

/// h^H S h is numerically zero: no information component to keep.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class EmptyFeasibleSet : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

class PowerDeficit : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

/// Every point of an outer one-dimensional search was infeasible.
class AllGridInfeasible : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

class NumericalTrouble : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace swipt
