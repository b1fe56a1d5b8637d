#pragma once

#include "bsbs/model.hpp"

namespace bsbs {

inline constexpr double kDefaultResidualTolerance = 1e-10;
inline constexpr double kDefaultTimeStep = 0.01;
/// Upper bound on the automatic integration horizon (units 1/omega_m).
inline constexpr double kMaxHorizon = 2.0e5;
/// Asymmetry of the raw solution above this is flagged in SolveReport.
inline constexpr double kAsymmetryWarning = 1e-8;

struct SolveOptions {
  double residual_tolerance = kDefaultResidualTolerance;
};

struct SolveReport {
  CovarianceMatrix covariance;
  /// ||A V + V A^T + D||_F / ||D||_F of the symmetrized solution.
  double residual_norm = 0.0;
  /// Largest |V_ij - V_ji| of the raw solution.
  double asymmetry = 0.0;
  /// Symmetrization moved some entry by more than 1e-12.
  bool symmetrized = false;
  bool asymmetry_warning = false;
};

/// Solves A V + V A^T = -D through the 36x36 Kronecker system
/// (I (x) A + A (x) I) vec(V) = -vec(D) with partial-pivot LU.
///
/// Throws Error(kUnstable) if A is not Hurwitz, Error(kSingular) if the
/// Kronecker system is numerically singular, and Error(kNumerical) if the
/// residual exceeds `options.residual_tolerance`.
SolveReport solve_steady_covariance(const DriftMatrix& a,
                                    const DiffusionMatrix& d,
                                    const SolveOptions& options = {});

/// Integrates dV/dt = A V + V A^T + D from V0 with classical RK4, step `dt`,
/// up to `t_end`, re-symmetrizing after every step.
/// Throws Error(kDomain) on bad arguments and Error(kDivergence) naming the
/// step at which the state stopped being finite.
CovarianceMatrix evolve_covariance(const DriftMatrix& a,
                                   const DiffusionMatrix& d,
                                   const CovarianceMatrix& v0, double dt,
                                   double t_end);

/// min(50 / gap, kMaxHorizon) where gap = -spectral abscissa of A.
/// Throws Error(kUnstable) for non-Hurwitz A.
double default_horizon(const DriftMatrix& a);

double lyapunov_residual(const DriftMatrix& a, const DiffusionMatrix& d,
                         const CovarianceMatrix& v);

}  // namespace bsbs
