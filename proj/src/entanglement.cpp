#include "bsbs/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "bsbs/errors.hpp"

namespace bsbs {

namespace {

constexpr std::array<std::string_view, 3> kModeNames = {"optical", "acoustic",
                                                        "mechanical"};

// Relative discriminant thresholds.
constexpr double kDiscriminantError = -1e-9;
constexpr double kDiscriminantWarn = -1e-12;

struct PtEigenvalue {
  double sigma;
  double det_chi;
  double nu_minus;
  bool clamped;
};

PtEigenvalue pt_eigenvalue(const PairCovariance& chi) {
  PtEigenvalue out{};
  out.sigma = compute_sigma(chi);
  out.det_chi = chi.m.determinant();
  double disc = out.sigma * out.sigma - 4.0 * out.det_chi;
  const double rel = disc / std::max(1.0, out.sigma * out.sigma);
  if (rel < kDiscriminantError) {
    throw Error(ErrorCode::kUnphysical,
                "negative discriminant in symplectic eigenvalue: state is "
                "not a physical Gaussian state");
  }
  if (disc < 0.0) {
    out.clamped = rel < kDiscriminantWarn;
    disc = 0.0;
  }
  const double inner = out.sigma - std::sqrt(disc);
  out.nu_minus = std::sqrt(std::max(inner, 0.0) / 2.0);
  return out;
}

}  // namespace

std::string_view mode_name(Mode mode) {
  return kModeNames[static_cast<std::size_t>(mode)];
}

ModePair::ModePair(Mode first, Mode second) : first_(first), second_(second) {
  if (first == second) {
    throw Error(ErrorCode::kDomain, "mode pair needs two distinct modes");
  }
}

ModePair ModePair::parse(std::string_view text) {
  auto bad = [&text](const char* why) {
    return Error(ErrorCode::kConfig, "mode pair '" + std::string(text) + "' " +
                                         why +
                                         " (expected e.g. optical-mechanical)");
  };
  auto lookup = [&](std::string_view name) -> Mode {
    for (std::size_t i = 0; i < kModeNames.size(); ++i) {
      if (kModeNames[i] == name) return static_cast<Mode>(i);
    }
    throw bad("names an unknown mode");
  };
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) throw bad("is not of the form a-b");
  const Mode a = lookup(text.substr(0, dash));
  const Mode b = lookup(text.substr(dash + 1));
  if (a == b) throw bad("repeats a mode");
  return ModePair(a, b);
}

std::string ModePair::name() const {
  return std::string(mode_name(first_)) + "-" + std::string(mode_name(second_));
}

PairCovariance extract_pair_covariance(const CovarianceMatrix& v,
                                       const ModePair& pair) {
  const int index[4] = {2 * static_cast<int>(pair.first()),
                        2 * static_cast<int>(pair.first()) + 1,
                        2 * static_cast<int>(pair.second()),
                        2 * static_cast<int>(pair.second()) + 1};
  PairCovariance chi;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) chi.m(r, c) = v.m(index[r], index[c]);
  }
  return chi;
}

double compute_sigma(const PairCovariance& chi) {
  const double det_i = chi.m.topLeftCorner<2, 2>().determinant();
  const double det_j = chi.m.bottomRightCorner<2, 2>().determinant();
  const double det_ij = chi.m.topRightCorner<2, 2>().determinant();
  return det_i + det_j - 2.0 * det_ij;
}

double min_symplectic_eigenvalue_pt(const PairCovariance& chi) {
  return pt_eigenvalue(chi).nu_minus;
}

EntanglementResult logarithmic_negativity(const PairCovariance& chi) {
  const PtEigenvalue pt = pt_eigenvalue(chi);
  EntanglementResult r;
  r.sigma = pt.sigma;
  r.det_chi = pt.det_chi;
  r.nu_minus = pt.nu_minus;
  r.discriminant_clamped = pt.clamped;
  r.entangled = pt.nu_minus < 0.5;
  if (pt.nu_minus == 0.0) {
    r.unbounded = true;
    r.log_negativity = std::numeric_limits<double>::infinity();
  } else {
    r.log_negativity = std::max(0.0, -std::log(2.0 * pt.nu_minus));
  }
  return r;
}

bool physicality_check(const CovarianceMatrix& v) {
  using Complex6 = Eigen::Matrix<std::complex<double>, 6, 6>;
  Complex6 h = v.m.cast<std::complex<double>>();
  const std::complex<double> half_i(0.0, 0.5);
  for (int k = 0; k < 3; ++k) {
    h(2 * k, 2 * k + 1) += half_i;
    h(2 * k + 1, 2 * k) -= half_i;
  }
  Eigen::SelfAdjointEigenSolver<Complex6> eig(h, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) return false;
  return eig.eigenvalues().minCoeff() >= -1e-9;
}

}  // namespace bsbs
