#include "bsbs/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bsbs/errors.hpp"

namespace bsbs {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kDomain, message);
}

}  // namespace

void SystemParams::validate() const {
  const double fields[] = {omega_m_hz, delta_tilde, delta_a,      kappa,
                           gamma_a,    gamma_m,     g_coupling_a, g_coupling_m,
                           n_th,       j_m,         theta,        g_single_m,
                           g_single_a};
  for (double v : fields) require(std::isfinite(v), "parameters must be finite");
  require(kappa > 0.0, "kappa must be > 0");
  require(gamma_a > 0.0, "gamma_a must be > 0");
  require(gamma_m > 0.0, "gamma_m must be > 0");
  require(n_th >= 0.0, "n_th must be >= 0");
  require(g_coupling_a >= 0.0, "g_coupling_a must be >= 0");
  require(g_coupling_m >= 0.0, "g_coupling_m must be >= 0");
  require(omega_m_hz > 0.0, "omega_m_hz must be > 0");
}

double SystemParams::to_si(double rate) const {
  return rate * 2.0 * std::numbers::pi * omega_m_hz;
}

double thermal_occupancy(double energy_ratio) {
  if (!(energy_ratio > 0.0)) {
    throw Error(ErrorCode::kDomain,
                "thermal_occupancy: energy ratio must be > 0");
  }
  return 1.0 / std::expm1(energy_ratio);
}

std::complex<double> control_amplitude(double drive_amplitude,
                                       double detuning_prime, double kappa_2) {
  if (!(kappa_2 > 0.0)) {
    throw Error(ErrorCode::kDomain, "control_amplitude: kappa_2 must be > 0");
  }
  const std::complex<double> denom(-kappa_2 / 2.0, detuning_prime);
  return -drive_amplitude / denom;
}

double effective_brillouin_coupling(double g_single_a,
                                    std::complex<double> alpha_2) {
  if (!(g_single_a >= 0.0)) {
    throw Error(ErrorCode::kDomain,
                "effective_brillouin_coupling: g_a must be >= 0");
  }
  return g_single_a * std::abs(alpha_2);
}

DriftMatrix build_drift_matrix(const SystemParams& p) {
  p.validate();
  if (p.j_m != 0.0) {
    // The printed drift matrix has no phonon-hopping entries.
    throw Error(ErrorCode::kUnsupported,
                "phonon-phonon hopping j_m != 0 is not supported");
  }
  const double omega_m = 1.0;
  const double ga = p.g_coupling_a;
  const double gm2 = 2.0 * p.g_coupling_m;

  DriftMatrix a;
  // clang-format off
  a.m <<
    -p.kappa / 2, -p.delta_tilde, 0,             -ga,           0,             0,
     p.delta_tilde, -p.kappa / 2, ga,             0,            gm2,           0,
     0,            -ga,          -p.gamma_a / 2,  p.delta_a,    0,             0,
     ga,            0,           -p.delta_a,     -p.gamma_a / 2, 0,            0,
     0,             0,            0,              0,           -p.gamma_m / 2, omega_m,
     gm2,           0,            0,              0,           -omega_m,      -p.gamma_m / 2;
  // clang-format on
  return a;
}

DiffusionMatrix build_diffusion_matrix(const SystemParams& p) {
  p.validate();
  const double thermal = p.gamma_m * (2.0 * p.n_th + 1.0) / 2.0;
  DiffusionMatrix d;
  d.m.diagonal() << p.kappa / 2, p.kappa / 2, p.gamma_a / 2, p.gamma_a / 2,
      thermal, thermal;
  return d;
}

}  // namespace bsbs
