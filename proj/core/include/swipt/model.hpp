#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swipt/hermitian.hpp"

namespace swipt {

/// Plain description of a MISO downlink with one information receiver (IR)
/// and K energy receivers (ERs). Channels are stored conjugated, so the IR
/// observes h^H x and ER k observes g_k^H x.
struct SystemSpec {
  CVector h;
  std::vector<CVector> g;
  double sigma0_sq = 0.0;
  std::vector<double> sigma_sq;  // empty: every ER uses sigma0_sq
  double p_bar = 0.0;
  double zeta = 1.0;
  std::vector<double> mu;     // empty: all ones
  std::vector<double> e_bar;  // empty: all zeros
  double r_bar0 = 0.0;
};

/// Validated, immutable system model.
class SystemModel {
 public:
  /// Throws InvalidArgument / DimensionMismatch on malformed input and
  /// LinearDependence when the channels violate the independence assumption
  /// (unless check_independence is false).
  explicit SystemModel(SystemSpec spec, bool check_independence = true,
                       double rank_tol = Tolerances::kRank);

  int M() const { return static_cast<int>(spec_.h.size()); }
  int K() const { return static_cast<int>(spec_.g.size()); }

  const CVector& h() const { return spec_.h; }
  const CVector& g(int k) const { return spec_.g.at(static_cast<size_t>(k)); }
  const std::vector<CVector>& g() const { return spec_.g; }
  double sigma0_sq() const { return spec_.sigma0_sq; }
  double sigma_sq(int k) const { return spec_.sigma_sq.at(static_cast<size_t>(k)); }
  double p_bar() const { return spec_.p_bar; }
  double zeta() const { return spec_.zeta; }
  double mu(int k) const { return spec_.mu.at(static_cast<size_t>(k)); }
  double e_bar(int k) const { return spec_.e_bar.at(static_cast<size_t>(k)); }
  const std::vector<double>& e_bar() const { return spec_.e_bar; }
  double r_bar0() const { return spec_.r_bar0; }
  const SystemSpec& spec() const { return spec_; }

  /// h h^H
  HermitianMatrix H() const { return HermitianMatrix::OuterProduct(spec_.h); }
  /// g_k g_k^H
  HermitianMatrix G(int k) const { return HermitianMatrix::OuterProduct(g(k)); }
  /// K x M matrix whose rows are g_k^H.
  CMatrix ER_matrix() const;

  SystemModel with_energy_targets(std::vector<double> e_bar) const;
  SystemModel with_uniform_energy_target(double e_bar) const;
  SystemModel with_rate_target(double r_bar0) const;
  /// Keeps only the first k ERs.
  SystemModel with_first_ers(int k) const;

 private:
  SystemModel(SystemSpec spec, int);  // trusted copy, no re-validation
  SystemSpec spec_;
};

/// Checks that every M-subset of {h, g_1..g_K} (or the whole set when it
/// has at most M vectors) has full rank, on unit-normalized vectors.
bool channels_independent(const CVector& h, const std::vector<CVector>& g, double rank_tol);

enum class Method { P1Optimal, P2Optimal, Sub1, Sub2, NoSC, NoIT, NoET };

std::string to_string(Method m);

struct BeamformingSolution {
  CVector v0;
  std::vector<CVector> w;
  Method method = Method::P1Optimal;

  double sum_power() const;
};

struct CovariancePair {
  HermitianMatrix S;
  HermitianMatrix Q;
  std::optional<double> t;
};

/// Multipliers of the normalized P1.1 relaxation in original units:
/// lambda for the normalization equality, beta_k for the eavesdropper caps,
/// alpha_k for the energy floors, theta for the power budget.
struct DualCertificate {
  double lambda = 0.0;
  std::vector<double> beta;
  std::vector<double> alpha;
  double theta = 0.0;
};

CovariancePair beams_to_covariances(const BeamformingSolution& sol);
/// Throws RankOneViolation when lambda_2(S) > rank_tol * lambda_1(S).
BeamformingSolution covariances_to_beams(const CovariancePair& cov,
                                         double rank_tol = Tolerances::kRank,
                                         Method method = Method::P1Optimal);

}  // namespace swipt
