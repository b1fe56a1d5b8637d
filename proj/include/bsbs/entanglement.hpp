#pragma once

#include <string>
#include <string_view>

#include <Eigen/Core>

#include "bsbs/model.hpp"

namespace bsbs {

using Matrix4 = Eigen::Matrix<double, 4, 4>;

enum class Mode { kOptical = 0, kAcoustic = 1, kMechanical = 2 };

std::string_view mode_name(Mode mode);

/// Ordered pair of distinct modes; the constructor throws Error(kDomain)
/// when both sides name the same mode.
class ModePair {
 public:
  ModePair(Mode first, Mode second);

  /// Parses "optical-mechanical", "acoustic-optical", ... Throws
  /// Error(kConfig) on anything else.
  static ModePair parse(std::string_view text);

  Mode first() const { return first_; }
  Mode second() const { return second_; }
  std::string name() const;

  friend bool operator==(const ModePair&, const ModePair&) = default;

 private:
  Mode first_;
  Mode second_;
};

/// Optical-mechanical, the bipartition the figures report.
inline const ModePair kOptomechanicalPair{Mode::kOptical, Mode::kMechanical};

/// Two-mode covariance chi = [[V_i, V_ij], [V_ij^T, V_j]].
struct PairCovariance {
  Matrix4 m = Matrix4::Zero();
  double operator()(int i, int j) const { return m(i, j); }
};

struct EntanglementResult {
  double sigma = 0.0;
  double det_chi = 0.0;
  double nu_minus = 0.0;
  /// +infinity when nu_minus == 0 (see `unbounded`).
  double log_negativity = 0.0;
  bool entangled = false;
  bool unbounded = false;
  /// A slightly negative discriminant was clamped to zero.
  bool discriminant_clamped = false;
};

/// Selects the 4x4 block of `v` on the pair's quadratures, in pair order.
/// Tracing out a Gaussian mode is just deleting its rows and columns.
PairCovariance extract_pair_covariance(const CovarianceMatrix& v,
                                       const ModePair& pair);

/// det V_i + det V_j - 2 det V_ij.
double compute_sigma(const PairCovariance& chi);

/// Smallest symplectic eigenvalue of the partial transpose,
/// sqrt(sigma - sqrt(sigma^2 - 4 det chi)) / sqrt(2).
///
/// The discriminant is compared relative to max(1, sigma^2): below -1e-9 it
/// throws Error(kUnphysical); between that and zero it is clamped.
double min_symplectic_eigenvalue_pt(const PairCovariance& chi);

/// E_N = max(0, -ln(2 nu_minus)) together with its ingredients.
EntanglementResult logarithmic_negativity(const PairCovariance& chi);

/// True iff V + (i/2) Omega is positive semidefinite (eigenvalues >= -1e-9),
/// Omega being the block-diagonal symplectic form [[0, 1], [-1, 0]].
bool physicality_check(const CovarianceMatrix& v);

}  // namespace bsbs
