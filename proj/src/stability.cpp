#include "bsbs/stability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "bsbs/errors.hpp"

namespace bsbs {

StabilityReport assess_stability(const DriftMatrix& a) {
  auto fail = [&a] {
    std::ostringstream msg;
    msg << "eigen-decomposition of the drift matrix failed:\n"
        << a.m.format(Eigen::IOFormat(Eigen::FullPrecision));
    return Error(ErrorCode::kNumerical, msg.str());
  };
  if (!a.m.allFinite()) throw fail();
  Eigen::EigenSolver<Matrix6> solver(a.m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw fail();

  StabilityReport report;
  const auto& values = solver.eigenvalues();
  for (int i = 0; i < 6; ++i) report.eigenvalues[i] = values(i);
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            [](const std::complex<double>& x, const std::complex<double>& y) {
              if (x.real() != y.real()) return x.real() > y.real();
              return x.imag() > y.imag();
            });

  report.spectral_abscissa = report.eigenvalues.front().real();
  report.stable = report.spectral_abscissa < -kStabilityMargin;
  report.marginal = std::abs(report.spectral_abscissa) <= kStabilityMargin;
  return report;
}

}  // namespace bsbs
