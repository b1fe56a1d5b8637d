#pragma once

#include <array>
#include <complex>

#include "bsbs/model.hpp"

namespace bsbs {

/// Eigenvalues with real part >= -kStabilityMargin count as not decaying.
inline constexpr double kStabilityMargin = 1e-12;

struct StabilityReport {
  double spectral_abscissa = 0.0;
  bool stable = false;
  /// |spectral_abscissa| <= kStabilityMargin; reported as unstable.
  bool marginal = false;
  /// Sorted by descending real part, ties by descending imaginary part.
  std::array<std::complex<double>, 6> eigenvalues{};
};

/// Hurwitz test via a dense nonsymmetric eigen-decomposition.
/// Throws Error(kNumerical), echoing the matrix, if the QR iteration fails.
StabilityReport assess_stability(const DriftMatrix& a);

}  // namespace bsbs
