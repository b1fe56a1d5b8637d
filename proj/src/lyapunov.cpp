#include "bsbs/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "bsbs/errors.hpp"
#include "bsbs/stability.hpp"

namespace bsbs {

namespace {

using Matrix36 = Eigen::Matrix<double, 36, 36>;
using Vector36 = Eigen::Matrix<double, 36, 1>;

// Column-major vec: vec(A V) = (I (x) A) vec(V), vec(V A^T) = (A (x) I) vec(V).
Matrix36 kronecker_sum(const Matrix6& a) {
  Matrix36 k = Matrix36::Zero();
  for (int j = 0; j < 6; ++j) {
    for (int l = 0; l < 6; ++l) {
      for (int i = 0; i < 6; ++i) {
        for (int m = 0; m < 6; ++m) {
          double v = 0.0;
          if (j == l) v += a(i, m);
          if (i == m) v += a(j, l);
          k(i + 6 * j, m + 6 * l) = v;
        }
      }
    }
  }
  return k;
}

Matrix6 rhs(const Matrix6& a, const Matrix6& d, const Matrix6& v) {
  const Matrix6 av = a * v;
  return av + av.transpose() + d;
}

}  // namespace

double lyapunov_residual(const DriftMatrix& a, const DiffusionMatrix& d,
                         const CovarianceMatrix& v) {
  return rhs(a.m, d.m, v.m).norm() / d.m.norm();
}

SolveReport solve_steady_covariance(const DriftMatrix& a,
                                    const DiffusionMatrix& d,
                                    const SolveOptions& options) {
  const StabilityReport stability = assess_stability(a);
  if (!stability.stable) {
    std::ostringstream msg;
    msg << "drift matrix is not Hurwitz (spectral abscissa "
        << stability.spectral_abscissa << ")";
    throw Error(ErrorCode::kUnstable, msg.str());
  }

  Eigen::PartialPivLU<Matrix36> lu(kronecker_sum(a.m));
  if (!(lu.rcond() > std::numeric_limits<double>::epsilon())) {
    throw Error(ErrorCode::kSingular, "Kronecker Lyapunov system is singular");
  }
  const Vector36 vec_d = Eigen::Map<const Vector36>(d.m.data());
  const Vector36 vec_v = lu.solve(-vec_d);

  SolveReport report;
  const Matrix6 raw = Eigen::Map<const Matrix6>(vec_v.data());
  report.asymmetry = (raw - raw.transpose()).cwiseAbs().maxCoeff();
  report.covariance.m = (raw + raw.transpose()) / 2.0;
  report.symmetrized = (report.covariance.m - raw).cwiseAbs().maxCoeff() > 1e-12;
  report.asymmetry_warning = report.asymmetry > kAsymmetryWarning;
  report.residual_norm = lyapunov_residual(a, d, report.covariance);

  if (!(report.residual_norm <= options.residual_tolerance)) {
    std::ostringstream msg;
    msg << "Lyapunov residual " << report.residual_norm
        << " exceeds tolerance " << options.residual_tolerance;
    throw Error(ErrorCode::kNumerical, msg.str());
  }
  return report;
}

CovarianceMatrix evolve_covariance(const DriftMatrix& a,
                                   const DiffusionMatrix& d,
                                   const CovarianceMatrix& v0, double dt,
                                   double t_end) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error(ErrorCode::kDomain, "evolve_covariance: dt must be > 0");
  }
  if (!(t_end >= dt) || !std::isfinite(t_end)) {
    throw Error(ErrorCode::kDomain, "evolve_covariance: t_end must be >= dt");
  }
  const double scale = std::max(1.0, v0.m.cwiseAbs().maxCoeff());
  if (!v0.m.allFinite() ||
      (v0.m - v0.m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw Error(ErrorCode::kDomain, "evolve_covariance: V0 must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix6> eig(v0.m, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10 * scale) {
    throw Error(ErrorCode::kDomain,
                "evolve_covariance: V0 must be positive semidefinite");
  }

  const auto steps = static_cast<long long>(std::ceil(t_end / dt - 1e-9));
  const double h = t_end / static_cast<double>(steps);
  const Matrix6& am = a.m;
  const Matrix6& dm = d.m;

  Matrix6 v = v0.m;
  for (long long n = 0; n < steps; ++n) {
    const Matrix6 k1 = rhs(am, dm, v);
    const Matrix6 k2 = rhs(am, dm, v + (h / 2) * k1);
    const Matrix6 k3 = rhs(am, dm, v + (h / 2) * k2);
    const Matrix6 k4 = rhs(am, dm, v + h * k3);
    v += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    v = (v + v.transpose()) / 2;
    if (!v.allFinite()) {
      std::ostringstream msg;
      msg << "covariance integration diverged at step " << n + 1 << " (t = "
          << static_cast<double>(n + 1) * h << ")";
      throw Error(ErrorCode::kDivergence, msg.str());
    }
  }
  return CovarianceMatrix{v};
}

double default_horizon(const DriftMatrix& a) {
  const StabilityReport stability = assess_stability(a);
  if (!stability.stable) {
    throw Error(ErrorCode::kUnstable,
                "integration horizon undefined for a non-Hurwitz drift matrix");
  }
  return std::min(50.0 / -stability.spectral_abscissa, kMaxHorizon);
}

}  // namespace bsbs
