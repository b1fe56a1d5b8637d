#include "bsbs/bsbs.h"

#include <cmath>
#include <exception>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "bsbs/config.hpp"
#include "bsbs/csv.hpp"
#include "bsbs/entanglement.hpp"
#include "bsbs/errors.hpp"
#include "bsbs/figures.hpp"
#include "bsbs/lyapunov.hpp"
#include "bsbs/model.hpp"
#include "bsbs/stability.hpp"
#include "bsbs/sweep.hpp"

struct bsbs_config {
  bsbs::RunConfig run;
};

struct bsbs_sweep {
  std::vector<bsbs::SweepAxis> axes;
  std::vector<bsbs::SweepRecord> records;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_pair_name;

bsbs_status to_status(bsbs::ErrorCode code) {
  using bsbs::ErrorCode;
  switch (code) {
    case ErrorCode::kOk: return BSBS_OK;
    case ErrorCode::kDomain: return BSBS_ERR_DOMAIN;
    case ErrorCode::kUnsupported: return BSBS_ERR_UNSUPPORTED;
    case ErrorCode::kConfig: return BSBS_ERR_CONFIG;
    case ErrorCode::kPresetNotFound: return BSBS_ERR_PRESET_NOT_FOUND;
    case ErrorCode::kIo: return BSBS_ERR_IO;
    case ErrorCode::kUnstable: return BSBS_ERR_UNSTABLE;
    case ErrorCode::kSingular: return BSBS_ERR_SINGULAR;
    case ErrorCode::kDivergence: return BSBS_ERR_DIVERGENCE;
    case ErrorCode::kUnphysical: return BSBS_ERR_UNPHYSICAL;
    case ErrorCode::kNumerical: return BSBS_ERR_NUMERICAL;
  }
  return BSBS_ERR_INTERNAL;
}

bsbs::ErrorCode from_status(bsbs_status status) {
  using bsbs::ErrorCode;
  switch (status) {
    case BSBS_OK: return ErrorCode::kOk;
    case BSBS_ERR_DOMAIN: return ErrorCode::kDomain;
    case BSBS_ERR_UNSUPPORTED: return ErrorCode::kUnsupported;
    case BSBS_ERR_CONFIG: return ErrorCode::kConfig;
    case BSBS_ERR_PRESET_NOT_FOUND: return ErrorCode::kPresetNotFound;
    case BSBS_ERR_IO: return ErrorCode::kIo;
    case BSBS_ERR_UNSTABLE: return ErrorCode::kUnstable;
    case BSBS_ERR_SINGULAR: return ErrorCode::kSingular;
    case BSBS_ERR_DIVERGENCE: return ErrorCode::kDivergence;
    case BSBS_ERR_UNPHYSICAL: return ErrorCode::kUnphysical;
    default: return ErrorCode::kNumerical;
  }
}

bsbs_status fail(bsbs_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
bsbs_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return BSBS_OK;
  } catch (const bsbs::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BSBS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BSBS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BSBS_ERR_INTERNAL, "unknown error");
  }
}

bsbs::Matrix6 load6(const double* rowmajor) {
  bsbs::Matrix6 m;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = rowmajor[6 * i + j];
  return m;
}

void store6(const bsbs::Matrix6& m, double* rowmajor) {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) rowmajor[6 * i + j] = m(i, j);
}

bsbs::Mode to_mode(bsbs_mode m) {
  switch (m) {
    case BSBS_MODE_OPTICAL: return bsbs::Mode::kOptical;
    case BSBS_MODE_ACOUSTIC: return bsbs::Mode::kAcoustic;
    case BSBS_MODE_MECHANICAL: return bsbs::Mode::kMechanical;
  }
  throw bsbs::Error(bsbs::ErrorCode::kDomain, "unknown mode");
}

void fill_stability(const bsbs::StabilityReport& r, bsbs_stability* out) {
  out->spectral_abscissa = r.spectral_abscissa;
  out->stable = r.stable;
  out->marginal = r.marginal;
  for (int i = 0; i < 6; ++i) {
    out->eigen_real[i] = r.eigenvalues[i].real();
    out->eigen_imag[i] = r.eigenvalues[i].imag();
  }
}

void fill_entanglement(const bsbs::EntanglementResult& r,
                       bsbs_entanglement* out) {
  out->sigma = r.sigma;
  out->det_chi = r.det_chi;
  out->nu_minus = r.nu_minus;
  out->log_negativity = r.log_negativity;
  out->entangled = r.entangled;
  out->unbounded = r.unbounded;
  out->discriminant_clamped = r.discriminant_clamped;
}

#define BSBS_REQUIRE(cond)                                                  \
  do {                                                                      \
    if (!(cond))                                                            \
      return fail(BSBS_ERR_INVALID_ARGUMENT, "invalid argument: " #cond);   \
  } while (0)

}  // namespace

extern "C" {

const char* bsbs_status_string(bsbs_status status) {
  switch (status) {
    case BSBS_OK: return "ok";
    case BSBS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BSBS_ERR_DOMAIN: return "domain error";
    case BSBS_ERR_UNSUPPORTED: return "unsupported feature";
    case BSBS_ERR_CONFIG: return "configuration error";
    case BSBS_ERR_PRESET_NOT_FOUND: return "preset not found";
    case BSBS_ERR_IO: return "I/O error";
    case BSBS_ERR_UNSTABLE: return "unstable";
    case BSBS_ERR_SINGULAR: return "singular system";
    case BSBS_ERR_DIVERGENCE: return "integration diverged";
    case BSBS_ERR_UNPHYSICAL: return "unphysical state";
    case BSBS_ERR_NUMERICAL: return "numerical error";
    case BSBS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bsbs_last_error(void) { return g_last_error.c_str(); }

const char* bsbs_version(void) { return "1.0.0"; }

int bsbs_csv_schema_version(void) { return bsbs::kCsvSchemaVersion; }

bsbs_status bsbs_config_create(bsbs_config** out) {
  BSBS_REQUIRE(out);
  return guarded([&] { *out = new bsbs_config{}; });
}

void bsbs_config_destroy(bsbs_config* config) { delete config; }

bsbs_status bsbs_config_clone(const bsbs_config* config, bsbs_config** out) {
  BSBS_REQUIRE(config && out);
  return guarded([&] { *out = new bsbs_config(*config); });
}

bsbs_status bsbs_config_load_file(bsbs_config* config, const char* path) {
  BSBS_REQUIRE(config && path);
  return guarded([&] { bsbs::load_config_file(config->run, path); });
}

bsbs_status bsbs_config_set(bsbs_config* config, const char* key,
                            const char* value) {
  BSBS_REQUIRE(config && key && value);
  return guarded([&] { bsbs::apply_setting(config->run, key, value); });
}

bsbs_status bsbs_config_apply_override(bsbs_config* config,
                                       const char* token) {
  BSBS_REQUIRE(config && token);
  return guarded([&] { bsbs::apply_override(config->run, token); });
}

bsbs_status bsbs_config_get_param(const bsbs_config* config, const char* key,
                                  double* out) {
  BSBS_REQUIRE(config && key && out);
  return guarded([&] { *out = bsbs::get_param_field(config->run.params, key); });
}

bsbs_status bsbs_config_validate(const bsbs_config* config) {
  BSBS_REQUIRE(config);
  return guarded([&] { bsbs::validate(config->run); });
}

const char* bsbs_config_output(const bsbs_config* config) {
  return config ? config->run.output.c_str() : "";
}

const char* bsbs_config_pair(const bsbs_config* config) {
  if (!config) return "";
  g_pair_name = config->run.pair.name();
  return g_pair_name.c_str();
}

int bsbs_config_axis_count(const bsbs_config* config) {
  return config ? static_cast<int>(config->run.axes.size()) : 0;
}

bsbs_status bsbs_thermal_occupancy(double energy_ratio, double* out) {
  BSBS_REQUIRE(out);
  return guarded([&] { *out = bsbs::thermal_occupancy(energy_ratio); });
}

bsbs_status bsbs_control_amplitude(double drive_amplitude,
                                   double detuning_prime, double kappa_2,
                                   double* out_real, double* out_imag) {
  BSBS_REQUIRE(out_real && out_imag);
  return guarded([&] {
    const auto alpha =
        bsbs::control_amplitude(drive_amplitude, detuning_prime, kappa_2);
    *out_real = alpha.real();
    *out_imag = alpha.imag();
  });
}

bsbs_status bsbs_effective_brillouin_coupling(double g_single_a,
                                              double alpha_real,
                                              double alpha_imag, double* out) {
  BSBS_REQUIRE(out);
  return guarded([&] {
    *out = bsbs::effective_brillouin_coupling(g_single_a,
                                              {alpha_real, alpha_imag});
  });
}

bsbs_status bsbs_drift_matrix(const bsbs_config* config, double out[36]) {
  BSBS_REQUIRE(config && out);
  return guarded(
      [&] { store6(bsbs::build_drift_matrix(config->run.params).m, out); });
}

bsbs_status bsbs_diffusion_matrix(const bsbs_config* config, double out[36]) {
  BSBS_REQUIRE(config && out);
  return guarded(
      [&] { store6(bsbs::build_diffusion_matrix(config->run.params).m, out); });
}

bsbs_status bsbs_assess_stability(const double drift[36], bsbs_stability* out) {
  BSBS_REQUIRE(drift && out);
  return guarded([&] {
    fill_stability(bsbs::assess_stability(bsbs::DriftMatrix{load6(drift)}), out);
  });
}

bsbs_status bsbs_solve_steady_covariance(const double drift[36],
                                         const double diffusion[36], double tol,
                                         double covariance_out[36],
                                         double* residual_norm) {
  BSBS_REQUIRE(drift && diffusion && covariance_out);
  return guarded([&] {
    bsbs::SolveOptions options;
    if (tol > 0.0) options.residual_tolerance = tol;
    const auto report = bsbs::solve_steady_covariance(
        bsbs::DriftMatrix{load6(drift)}, bsbs::DiffusionMatrix{load6(diffusion)},
        options);
    store6(report.covariance.m, covariance_out);
    if (residual_norm) *residual_norm = report.residual_norm;
  });
}

bsbs_status bsbs_evolve_covariance(const double drift[36],
                                   const double diffusion[36],
                                   const double v0[36], double dt, double t_end,
                                   double covariance_out[36]) {
  BSBS_REQUIRE(drift && diffusion && v0 && covariance_out);
  return guarded([&] {
    const auto v = bsbs::evolve_covariance(
        bsbs::DriftMatrix{load6(drift)}, bsbs::DiffusionMatrix{load6(diffusion)},
        bsbs::CovarianceMatrix{load6(v0)}, dt, t_end);
    store6(v.m, covariance_out);
  });
}

bsbs_status bsbs_lyapunov_residual(const double drift[36],
                                   const double diffusion[36],
                                   const double covariance[36], double* out) {
  BSBS_REQUIRE(drift && diffusion && covariance && out);
  return guarded([&] {
    *out = bsbs::lyapunov_residual(bsbs::DriftMatrix{load6(drift)},
                                   bsbs::DiffusionMatrix{load6(diffusion)},
                                   bsbs::CovarianceMatrix{load6(covariance)});
  });
}

bsbs_status bsbs_extract_pair(const double covariance[36], bsbs_mode first,
                              bsbs_mode second, double chi_out[16]) {
  BSBS_REQUIRE(covariance && chi_out);
  return guarded([&] {
    const bsbs::ModePair pair(to_mode(first), to_mode(second));
    const auto chi = bsbs::extract_pair_covariance(
        bsbs::CovarianceMatrix{load6(covariance)}, pair);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) chi_out[4 * i + j] = chi.m(i, j);
  });
}

bsbs_status bsbs_logarithmic_negativity(const double chi[16],
                                        bsbs_entanglement* out) {
  BSBS_REQUIRE(chi && out);
  return guarded([&] {
    bsbs::PairCovariance pc;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) pc.m(i, j) = chi[4 * i + j];
    fill_entanglement(bsbs::logarithmic_negativity(pc), out);
  });
}

bsbs_status bsbs_physicality_check(const double covariance[36],
                                   int* physical) {
  BSBS_REQUIRE(covariance && physical);
  return guarded([&] {
    *physical =
        bsbs::physicality_check(bsbs::CovarianceMatrix{load6(covariance)});
  });
}

bsbs_status bsbs_evaluate_point(const bsbs_config* config,
                                bsbs_point_result* out) {
  BSBS_REQUIRE(config && out);
  *out = bsbs_point_result{};
  const bsbs_status setup = guarded([&] { bsbs::validate(config->run); });
  if (setup != BSBS_OK) {
    out->status = setup;
    return setup;
  }
  bsbs::PointResult point;
  const bsbs_status run = guarded([&] {
    bsbs::SolveOptions options;
    options.residual_tolerance = config->run.tol_residual;
    point = bsbs::evaluate_point(config->run.params, config->run.pair, options);
  });
  if (run != BSBS_OK) {
    out->status = run;
    return run;
  }
  if (point.stability) {
    out->has_stability = 1;
    fill_stability(*point.stability, &out->stability);
  }
  if (point.solve) {
    out->has_solution = 1;
    out->residual_norm = point.solve->residual_norm;
    out->symmetrized = point.solve->symmetrized;
    out->asymmetry_warning = point.solve->asymmetry_warning;
    out->physical = point.physical;
    store6(point.solve->covariance.m, out->covariance);
  }
  if (point.entanglement) {
    out->has_entanglement = 1;
    fill_entanglement(*point.entanglement, &out->entanglement);
  }
  out->status = to_status(point.error);
  if (out->status != BSBS_OK) return fail(out->status, point.message);
  return BSBS_OK;
}

bsbs_status bsbs_sweep_run(const bsbs_config* config, bsbs_sweep** out) {
  BSBS_REQUIRE(config && out);
  *out = nullptr;
  return guarded([&] {
    bsbs::validate(config->run);
    if (config->run.axes.empty()) {
      throw bsbs::Error(bsbs::ErrorCode::kConfig,
                        "sweep needs axis1 (and optionally axis2)");
    }
    bsbs::SweepOptions options;
    options.workers = config->run.workers;
    options.solve.residual_tolerance = config->run.tol_residual;
    auto sweep = std::make_unique<bsbs_sweep>();
    sweep->axes = config->run.axes;
    sweep->records = bsbs::run_sweep(config->run.params, sweep->axes,
                                     config->run.pair, options);
    *out = sweep.release();
  });
}

bsbs_status bsbs_point_write_csv(const bsbs_point_result* point,
                                 const char* path) {
  BSBS_REQUIRE(point && path);
  return guarded([&] {
    bsbs::SweepRecord r;
    if (point->has_stability) {
      r.stable = point->stability.stable;
      r.marginal = point->stability.marginal;
      r.spectral_abscissa = point->stability.spectral_abscissa;
    }
    if (point->has_solution) r.residual_norm = point->residual_norm;
    r.physical = point->physical;
    if (point->has_entanglement && point->status == BSBS_OK) {
      r.e_n = point->entanglement.log_negativity;
      r.nu_minus = point->entanglement.nu_minus;
    }
    r.error = from_status(point->status);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw bsbs::Error(bsbs::ErrorCode::kIo, std::string("cannot write ") + path);
    }
    const bsbs::SweepRecord records[] = {r};
    bsbs::write_sweep_csv(out, {}, records);
    out.flush();
    if (!out) {
      throw bsbs::Error(bsbs::ErrorCode::kIo, std::string("error writing ") + path);
    }
  });
}

void bsbs_sweep_destroy(bsbs_sweep* sweep) { delete sweep; }

size_t bsbs_sweep_size(const bsbs_sweep* sweep) {
  return sweep ? sweep->records.size() : 0;
}

bsbs_status bsbs_sweep_record_at(const bsbs_sweep* sweep, size_t index,
                                 bsbs_sweep_record* out) {
  BSBS_REQUIRE(sweep && out && index < sweep->records.size());
  const auto& r = sweep->records[index];
  const double nan = std::nan("");
  out->axis_values[0] = r.axis_values[0];
  out->axis_values[1] = r.axis_values[1];
  out->stable = r.stable;
  out->marginal = r.marginal;
  out->has_e_n = r.e_n.has_value();
  out->e_n = r.e_n.value_or(nan);
  out->nu_minus = r.nu_minus.value_or(nan);
  out->spectral_abscissa = r.spectral_abscissa.value_or(nan);
  out->residual_norm = r.residual_norm.value_or(nan);
  out->physical = r.physical;
  out->status = to_status(r.error);
  g_last_error.clear();
  return BSBS_OK;
}

bsbs_status bsbs_sweep_write_csv(const bsbs_sweep* sweep, const char* path) {
  BSBS_REQUIRE(sweep && path);
  return guarded([&] {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw bsbs::Error(bsbs::ErrorCode::kIo, std::string("cannot write ") + path);
    }
    bsbs::write_sweep_csv(out, sweep->axes, sweep->records);
    out.flush();
    if (!out) {
      throw bsbs::Error(bsbs::ErrorCode::kIo, std::string("error writing ") + path);
    }
  });
}

size_t bsbs_figure_count(void) { return bsbs::figure_presets().size(); }

const char* bsbs_figure_name(size_t index) {
  const auto presets = bsbs::figure_presets();
  return index < presets.size() ? presets[index].name.c_str() : nullptr;
}

bsbs_status bsbs_figure_run(const char* name, const bsbs_config* config,
                            const char* out_dir, size_t* unstable_points) {
  BSBS_REQUIRE(name && out_dir);
  return guarded([&] {
    const bsbs::RunConfig defaults;
    const auto data = bsbs::run_figure(name, config ? config->run : defaults);
    bsbs::write_figure(data, out_dir);
    if (unstable_points) {
      std::size_t missing = 0;
      for (const auto& curve : data.curves)
        for (const auto& r : curve) missing += r.e_n ? 0 : 1;
      *unstable_points = missing;
    }
  });
}

}  // extern "C"
