#include <chrono>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "bsbs/errors.hpp"
#include "bsbs/lyapunov.hpp"
#include "bsbs/model.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bsbs;

namespace {

const Matrix6 kHalf = Matrix6::Identity() / 2;

SystemParams reference(double g_a = 0.2, double delta_a = 1.0) {
  SystemParams p;
  p.g_coupling_a = g_a;
  p.delta_a = delta_a;
  return p;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

CovarianceMatrix product_state(double n_th) {
  CovarianceMatrix v{kHalf};
  v.m(4, 4) = v.m(5, 5) = n_th + 0.5;
  return v;
}

}  // namespace

TEST_CASE("vacuum fixed point") {
  const SolveReport r = solve_steady_covariance(DriftMatrix{-kHalf}, DiffusionMatrix{kHalf});
  CHECK(oracle::max_abs_diff(r.covariance.m, kHalf) < 1e-15);
  CHECK(r.residual_norm <= 1e-15);
  CHECK_FALSE(r.asymmetry_warning);
}

TEST_CASE("uncoupled thermal steady state") {
  SystemParams p = reference(0.0);
  p.g_coupling_m = 0.0;
  const SolveReport r =
      solve_steady_covariance(build_drift_matrix(p), build_diffusion_matrix(p));
  // Damped oscillator in a bath of n quanta: variance n + 1/2 per quadrature.
  Matrix6 expected = kHalf;
  expected(4, 4) = expected(5, 5) = 100.5;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(std::abs(r.covariance(i, j) - expected(i, j)) <=
            1e-8 * std::max(1.0, std::abs(expected(i, j))));
}

TEST_CASE("residual examples") {
  CHECK(lyapunov_residual(DriftMatrix{-kHalf}, DiffusionMatrix{kHalf}, CovarianceMatrix{kHalf}) == 0.0);
  CHECK(lyapunov_residual(DriftMatrix{-kHalf}, DiffusionMatrix{kHalf},
                          CovarianceMatrix{Matrix6::Identity()}) == doctest::Approx(1.0));

  const SystemParams p = reference();
  const auto a = build_drift_matrix(p);
  const auto d = build_diffusion_matrix(p);
  const SolveReport r = solve_steady_covariance(a, d);
  CHECK(lyapunov_residual(a, d, r.covariance) <= 1e-10);
  CHECK(r.residual_norm == lyapunov_residual(a, d, r.covariance));
}

TEST_CASE("solver matches the eigenbasis oracle on random stable systems") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 50; ++k) {
    const auto sys = oracle::random_stable_system(rng);
    const SolveReport r = solve_steady_covariance(DriftMatrix{sys.a}, DiffusionMatrix{sys.d});
    const Matrix6 expected = oracle::lyapunov_by_eigenbasis(sys.a, sys.d);
    CHECK(oracle::max_abs_diff(r.covariance.m, expected) < 1e-10);
    CHECK(r.residual_norm <= 1e-10);

    // Symmetric positive semidefinite.
    CHECK(r.covariance.m == r.covariance.m.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix6> eig(r.covariance.m);
    CHECK(eig.eigenvalues().minCoeff() >= -1e-10);
  }
}

TEST_CASE("linearity and scaling in D") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const auto s1 = oracle::random_stable_system(rng);
    const auto s2 = oracle::random_stable_system(rng);
    const DriftMatrix a{s1.a};
    const Matrix6 v1 = solve_steady_covariance(a, DiffusionMatrix{s1.d}).covariance.m;
    const Matrix6 v2 = solve_steady_covariance(a, DiffusionMatrix{s2.d}).covariance.m;
    const Matrix6 v12 = solve_steady_covariance(a, DiffusionMatrix{s1.d + s2.d}).covariance.m;
    CHECK((v12 - v1 - v2).norm() <= 1e-9 * v12.norm());

    const double c = 0.01 + 10.0 * std::uniform_real_distribution<double>(0, 1)(rng);
    const Matrix6 vc = solve_steady_covariance(a, DiffusionMatrix{c * s1.d}).covariance.m;
    CHECK((vc - c * v1).norm() <= 1e-9 * vc.norm());
  }
}

TEST_CASE("solver rejects non-Hurwitz drift") {
  CHECK(code_of([] {
          solve_steady_covariance(DriftMatrix{Matrix6::Identity() * 0.1}, DiffusionMatrix{kHalf});
        }) == ErrorCode::kUnstable);
  SystemParams blue;
  blue.delta_tilde = 1.0;
  CHECK(code_of([&] {
          solve_steady_covariance(build_drift_matrix(blue), build_diffusion_matrix(blue));
        }) == ErrorCode::kUnstable);
}

TEST_CASE("residual tolerance is enforced") {
  const SystemParams p = reference();
  SolveOptions strict;
  strict.residual_tolerance = 1e-30;
  CHECK(code_of([&] {
          solve_steady_covariance(build_drift_matrix(p), build_diffusion_matrix(p), strict);
        }) == ErrorCode::kNumerical);
}

TEST_CASE("integrator fixed point and analytic relaxation") {
  const CovarianceMatrix v = evolve_covariance(DriftMatrix{-kHalf}, DiffusionMatrix{kHalf},
                                               CovarianceMatrix{kHalf}, 0.01, 10.0);
  CHECK(oracle::max_abs_diff(v.m, kHalf) < 1e-14);

  // v' = -v + 1/2 from v(0) = 1: v(t) = 1/2 + e^{-t} / 2.
  const CovarianceMatrix w = evolve_covariance(DriftMatrix{-kHalf}, DiffusionMatrix{kHalf},
                                               CovarianceMatrix{Matrix6::Identity()}, 0.01, 10.0);
  const double expected = 0.5 + 0.5 * std::exp(-10.0);
  CHECK(expected == doctest::Approx(0.5000227).epsilon(1e-7));
  for (int i = 0; i < 6; ++i) {
    CHECK(std::abs(w(i, i) - expected) < 1e-12);
    for (int j = 0; j < 6; ++j)
      if (i != j) CHECK(w(i, j) == 0.0);
  }
}

TEST_CASE("integrator argument checks and divergence") {
  const DriftMatrix a{-kHalf};
  const DiffusionMatrix d{kHalf};
  const CovarianceMatrix v0{kHalf};
  CHECK(code_of([&] { evolve_covariance(a, d, v0, 0.0, 1.0); }) == ErrorCode::kDomain);
  CHECK(code_of([&] { evolve_covariance(a, d, v0, 0.1, 0.01); }) == ErrorCode::kDomain);
  Matrix6 asym = kHalf;
  asym(0, 1) = 0.1;
  CHECK(code_of([&] { evolve_covariance(a, d, CovarianceMatrix{asym}, 0.1, 1.0); }) ==
        ErrorCode::kDomain);
  CHECK(code_of([&] { evolve_covariance(a, d, CovarianceMatrix{-kHalf}, 0.1, 1.0); }) ==
        ErrorCode::kDomain);

  try {
    evolve_covariance(DriftMatrix{Matrix6::Identity() * 5.0}, d, v0, 0.1, 1e4);
    FAIL("expected divergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDivergence);
    CHECK(std::string(e.what()).find("step") != std::string::npos);
  }
}

TEST_CASE("integrator converges to the Lyapunov solution on random systems") {
  std::mt19937_64 rng(1234);
  for (int k = 0; k < 10; ++k) {
    const auto sys = oracle::random_stable_system(rng);
    const DriftMatrix a{sys.a};
    const DiffusionMatrix d{sys.d};
    const Matrix6 steady = solve_steady_covariance(a, d).covariance.m;
    const Matrix6 evolved =
        evolve_covariance(a, d, CovarianceMatrix{kHalf}, kDefaultTimeStep, default_horizon(a)).m;
    CHECK(oracle::max_abs_diff(steady, evolved) <= 1e-6);
  }
}

TEST_CASE("reference point: integrator to t = 2e5 matches the solver") {
  const SystemParams p = reference();
  const auto a = build_drift_matrix(p);
  const auto d = build_diffusion_matrix(p);
  const Matrix6 steady = solve_steady_covariance(a, d).covariance.m;
  const Matrix6 evolved = evolve_covariance(a, d, product_state(100.0), kDefaultTimeStep, 2e5).m;
  CHECK(oracle::max_abs_diff(steady, evolved) <= 1e-6);
}

TEST_CASE("default horizon") {
  CHECK(default_horizon(DriftMatrix{-kHalf}) == doctest::Approx(100.0));
  CHECK(default_horizon(DriftMatrix{-1e-9 * Matrix6::Identity()}) == kMaxHorizon);
  CHECK(code_of([] { default_horizon(DriftMatrix{Matrix6::Identity()}); }) == ErrorCode::kUnstable);
}
