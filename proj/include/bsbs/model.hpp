#pragma once

#include <complex>

#include <Eigen/Core>

namespace bsbs {

using Matrix6 = Eigen::Matrix<double, 6, 6>;

/// Parameters of the linearized optical / acoustic / mechanical system.
///
/// Every rate, detuning and coupling is expressed in units of the mechanical
/// frequency, so the mechanical frequency itself is 1 inside the model.
/// `omega_m_hz` (omega_m / 2 pi in Hz) is only a reporting scale.
///
/// Defaults are the reference operating point: kappa = 0.02, gamma_a = 0.4,
/// gamma_m = 1e-4, n_th = 100, G_m = 0.15, red-sideband detuning -1, with the
/// acoustic mode driven on resonance (Delta_a = 1) at G_a = 0.2.
struct SystemParams {
  double omega_m_hz = 1.0e6;
  double delta_tilde = -1.0;
  double delta_a = 1.0;
  double kappa = 0.02;
  double gamma_a = 0.4;
  double gamma_m = 1.0e-4;
  double g_coupling_a = 0.2;
  double g_coupling_m = 0.15;
  double n_th = 100.0;
  double j_m = 0.0;
  double theta = 0.0;
  double g_single_m = 1.0e-4;
  double g_single_a = 0.0;

  /// Throws Error(kDomain) when an invariant is violated: decay rates must
  /// be strictly positive, n_th and the effective couplings non-negative,
  /// and every field finite.
  void validate() const;

  /// Converts a rate in units of omega_m to rad/s.
  double to_si(double rate) const;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Real 6x6 drift matrix. Rows/columns follow the quadrature ordering
/// (X_a1, Y_a1, q_a, p_a, q_m, p_m).
struct DriftMatrix {
  Matrix6 m = Matrix6::Zero();
  double operator()(int i, int j) const { return m(i, j); }
};

/// Diagonal noise matrix of the covariance equation.
struct DiffusionMatrix {
  Matrix6 m = Matrix6::Zero();
  double operator()(int i, int j) const { return m(i, j); }
};

/// Symmetrized second moments V_ij = <z_i z_j + z_j z_i> / 2. Vacuum is I/2.
struct CovarianceMatrix {
  Matrix6 m = Matrix6::Zero();
  double operator()(int i, int j) const { return m(i, j); }
};

/// Mean thermal occupation 1 / (exp(x) - 1) for x = hbar omega_m / (k_B T).
/// Throws Error(kDomain) unless x > 0.
double thermal_occupancy(double energy_ratio);

/// Classical steady state of the strong control field,
/// alpha_2 = -E_2 / (i Delta'_2 - kappa_2 / 2). Requires kappa_2 > 0.
std::complex<double> control_amplitude(double drive_amplitude,
                                       double detuning_prime, double kappa_2);

/// G_a = g_a |alpha_2|; the model keeps the effective coupling real.
double effective_brillouin_coupling(double g_single_a,
                                    std::complex<double> alpha_2);

/// Throws Error(kUnsupported) if j_m != 0 and Error(kDomain) on invalid
/// parameters.
DriftMatrix build_drift_matrix(const SystemParams& params);

DiffusionMatrix build_diffusion_matrix(const SystemParams& params);

}  // namespace bsbs
