/*
 * C interface to the bsbs library: steady-state entanglement of a linearized
 * optical / acoustic (Brillouin) / mechanical three-mode system.
 *
 * Conventions
 *  - Every function returns a bsbs_status. On failure a human readable
 *    message is available from bsbs_last_error() on the calling thread until
 *    the next call into the library from that thread.
 *  - 6x6 matrices are passed as 36 doubles in row-major order, quadrature
 *    order (X_a1, Y_a1, q_a, p_a, q_m, p_m). 4x4 two-mode blocks likewise.
 *  - Handles are opaque; every create or run call has a matching destroy.
 *    A handle may be read from several threads but not mutated concurrently.
 */
#ifndef BSBS_BSBS_H
#define BSBS_BSBS_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(BSBS_BUILDING_LIBRARY)
#    define BSBS_API __declspec(dllexport)
#  else
#    define BSBS_API __declspec(dllimport)
#  endif
#else
#  define BSBS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bsbs_status {
  BSBS_OK = 0,
  BSBS_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad index */
  BSBS_ERR_DOMAIN = 2,
  BSBS_ERR_UNSUPPORTED = 3,
  BSBS_ERR_CONFIG = 4,
  BSBS_ERR_PRESET_NOT_FOUND = 5,
  BSBS_ERR_IO = 6,
  BSBS_ERR_UNSTABLE = 7,
  BSBS_ERR_SINGULAR = 8,
  BSBS_ERR_DIVERGENCE = 9,
  BSBS_ERR_UNPHYSICAL = 10,
  BSBS_ERR_NUMERICAL = 11,
  BSBS_ERR_INTERNAL = 12
} bsbs_status;

typedef enum bsbs_mode {
  BSBS_MODE_OPTICAL = 0,
  BSBS_MODE_ACOUSTIC = 1,
  BSBS_MODE_MECHANICAL = 2
} bsbs_mode;

typedef struct bsbs_config bsbs_config;
typedef struct bsbs_sweep bsbs_sweep;

typedef struct bsbs_stability {
  double spectral_abscissa;
  int stable;
  int marginal;
  /* Sorted by descending real part. */
  double eigen_real[6];
  double eigen_imag[6];
} bsbs_stability;

typedef struct bsbs_entanglement {
  double sigma;
  double det_chi;
  double nu_minus;
  double log_negativity; /* +inf when unbounded */
  int entangled;
  int unbounded;
  int discriminant_clamped;
} bsbs_entanglement;

typedef struct bsbs_point_result {
  int has_stability;
  bsbs_stability stability;
  int has_solution;
  double residual_norm;
  int symmetrized;
  int asymmetry_warning;
  int physical;
  double covariance[36];
  int has_entanglement;
  bsbs_entanglement entanglement;
  /* Pipeline outcome; BSBS_OK when every stage succeeded. */
  bsbs_status status;
} bsbs_point_result;

typedef struct bsbs_sweep_record {
  double axis_values[2];
  int stable;
  int marginal;
  int has_e_n; /* 0 means no data (unstable or failed point) */
  double e_n;
  double nu_minus;
  double spectral_abscissa;
  double residual_norm;
  int physical;
  bsbs_status status;
} bsbs_sweep_record;

/* ---- diagnostics ------------------------------------------------------- */

BSBS_API const char* bsbs_status_string(bsbs_status status);
BSBS_API const char* bsbs_last_error(void);
BSBS_API const char* bsbs_version(void);
BSBS_API int bsbs_csv_schema_version(void);

/* ---- configuration ----------------------------------------------------- */

/* Starts from the reference parameters (see README). */
BSBS_API bsbs_status bsbs_config_create(bsbs_config** out);
BSBS_API void bsbs_config_destroy(bsbs_config* config);
BSBS_API bsbs_status bsbs_config_clone(const bsbs_config* config,
                                       bsbs_config** out);
/* Flat "key = value" file; unknown keys are rejected. */
BSBS_API bsbs_status bsbs_config_load_file(bsbs_config* config,
                                           const char* path);
BSBS_API bsbs_status bsbs_config_set(bsbs_config* config, const char* key,
                                     const char* value);
/* "key=value" as written on a command line. */
BSBS_API bsbs_status bsbs_config_apply_override(bsbs_config* config,
                                                const char* token);
/* Reads a numeric physical parameter by key. */
BSBS_API bsbs_status bsbs_config_get_param(const bsbs_config* config,
                                           const char* key, double* out);
BSBS_API bsbs_status bsbs_config_validate(const bsbs_config* config);
/* Output path of the config ("" when unset). Valid while config lives. */
BSBS_API const char* bsbs_config_output(const bsbs_config* config);
/* Pair name such as "optical-mechanical". Thread-local buffer, valid until
 * the next bsbs_config_pair call on the same thread. */
BSBS_API const char* bsbs_config_pair(const bsbs_config* config);
BSBS_API int bsbs_config_axis_count(const bsbs_config* config);

/* ---- model ------------------------------------------------------------- */

BSBS_API bsbs_status bsbs_thermal_occupancy(double energy_ratio, double* out);
BSBS_API bsbs_status bsbs_control_amplitude(double drive_amplitude,
                                            double detuning_prime,
                                            double kappa_2, double* out_real,
                                            double* out_imag);
BSBS_API bsbs_status bsbs_effective_brillouin_coupling(double g_single_a,
                                                       double alpha_real,
                                                       double alpha_imag,
                                                       double* out);
BSBS_API bsbs_status bsbs_drift_matrix(const bsbs_config* config,
                                       double out[36]);
BSBS_API bsbs_status bsbs_diffusion_matrix(const bsbs_config* config,
                                           double out[36]);

/* ---- numerics on raw matrices ----------------------------------------- */

BSBS_API bsbs_status bsbs_assess_stability(const double drift[36],
                                           bsbs_stability* out);
/* residual_norm may be NULL. tol <= 0 selects the default 1e-10. */
BSBS_API bsbs_status bsbs_solve_steady_covariance(const double drift[36],
                                                  const double diffusion[36],
                                                  double tol,
                                                  double covariance_out[36],
                                                  double* residual_norm);
BSBS_API bsbs_status bsbs_evolve_covariance(const double drift[36],
                                            const double diffusion[36],
                                            const double v0[36], double dt,
                                            double t_end,
                                            double covariance_out[36]);
BSBS_API bsbs_status bsbs_lyapunov_residual(const double drift[36],
                                            const double diffusion[36],
                                            const double covariance[36],
                                            double* out);
BSBS_API bsbs_status bsbs_extract_pair(const double covariance[36],
                                       bsbs_mode first, bsbs_mode second,
                                       double chi_out[16]);
BSBS_API bsbs_status bsbs_logarithmic_negativity(const double chi[16],
                                                 bsbs_entanglement* out);
BSBS_API bsbs_status bsbs_physicality_check(const double covariance[36],
                                            int* physical);

/* ---- pipeline ---------------------------------------------------------- */

/* Drift -> stability -> Lyapunov -> E_N at the configured point.
 * `out` is filled as far as the pipeline got; the return value equals
 * out->status (BSBS_ERR_UNSTABLE for a non-Hurwitz point). */
BSBS_API bsbs_status bsbs_evaluate_point(const bsbs_config* config,
                                         bsbs_point_result* out);

/* Writes the point as a one-row CSV with the sweep record columns. */
BSBS_API bsbs_status bsbs_point_write_csv(const bsbs_point_result* point,
                                          const char* path);

/* Sweep over the config's axis1/axis2. Per-point failures are stored in the
 * records; only configuration problems fail the call. */
BSBS_API bsbs_status bsbs_sweep_run(const bsbs_config* config,
                                    bsbs_sweep** out);
BSBS_API void bsbs_sweep_destroy(bsbs_sweep* sweep);
BSBS_API size_t bsbs_sweep_size(const bsbs_sweep* sweep);
BSBS_API bsbs_status bsbs_sweep_record_at(const bsbs_sweep* sweep,
                                          size_t index,
                                          bsbs_sweep_record* out);
BSBS_API bsbs_status bsbs_sweep_write_csv(const bsbs_sweep* sweep,
                                          const char* path);

/* Number of known figure presets and their names. */
BSBS_API size_t bsbs_figure_count(void);
BSBS_API const char* bsbs_figure_name(size_t index);
/* Runs preset `name` with `config` supplying overrides (NULL: defaults) and
 * writes <out_dir>/<name>.csv and <out_dir>/<name>.gp. `unstable_points`
 * (may be NULL) receives the number of grid points without data. */
BSBS_API bsbs_status bsbs_figure_run(const char* name,
                                     const bsbs_config* config,
                                     const char* out_dir,
                                     size_t* unstable_points);

#ifdef __cplusplus
}
#endif

#endif /* BSBS_BSBS_H */
