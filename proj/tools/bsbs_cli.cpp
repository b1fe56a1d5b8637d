// bsbs command-line front end. Uses only the C interface of libbsbs.
//
//   bsbs point  [options] [key=value ...]
//   bsbs sweep  --axis name:start:stop:count [--axis ...] --out FILE [...]
//   bsbs figure NAME [--out DIR] [--grid N] [...]
//
// Exit codes: 0 success, 1 usage/configuration/I-O, 2 numerical failure or
// unstable point.

#include <bsbs/bsbs.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

int exit_code_for(bsbs_status status) {
  switch (status) {
    case BSBS_OK:
      return kExitOk;
    case BSBS_ERR_INVALID_ARGUMENT:
    case BSBS_ERR_DOMAIN:
    case BSBS_ERR_UNSUPPORTED:
    case BSBS_ERR_CONFIG:
    case BSBS_ERR_PRESET_NOT_FOUND:
    case BSBS_ERR_IO:
      return kExitUsage;
    default:
      return kExitNumerical;
  }
}

int report_failure(bsbs_status status) {
  std::fprintf(stderr, "bsbs: %s: %s\n", bsbs_status_string(status),
               bsbs_last_error());
  return exit_code_for(status);
}

struct ConfigDeleter {
  void operator()(bsbs_config* c) const { bsbs_config_destroy(c); }
};
struct SweepDeleter {
  void operator()(bsbs_sweep* s) const { bsbs_sweep_destroy(s); }
};
using ConfigPtr = std::unique_ptr<bsbs_config, ConfigDeleter>;
using SweepPtr = std::unique_ptr<bsbs_sweep, SweepDeleter>;

// Options shared by all subcommands.
struct CommonOptions {
  std::string config_path;
  std::optional<std::string> out;
  std::optional<std::string> pair;
  std::optional<int> workers;
  std::optional<double> tol_residual;
  std::optional<int> grid;
  std::vector<std::string> axes;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_axes,
                bool with_grid) {
  cmd->add_option("--config", o.config_path, "flat key = value config file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", o.out, "output file (point, sweep) or directory (figure)");
  cmd->add_option("--pair", o.pair,
                  "optical-mechanical | optical-acoustic | acoustic-mechanical");
  cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)")
      ->envname("BSBS_WORKERS");
  cmd->add_option("--tol-residual", o.tol_residual,
                  "relative Lyapunov residual tolerance");
  if (with_axes) {
    cmd->add_option("--axis", o.axes, "sweep axis name:start:stop:count (1 or 2)");
  }
  if (with_grid) cmd->add_option("--grid", o.grid, "points per figure axis");
  cmd->add_option("overrides", o.overrides, "parameter overrides key=value");
}

// Config file first, then flags, then key=value overrides.
bsbs_status build_config(const CommonOptions& o, ConfigPtr& out) {
  bsbs_config* raw = nullptr;
  bsbs_status st = bsbs_config_create(&raw);
  if (st != BSBS_OK) return st;
  out.reset(raw);
  bsbs_config* c = out.get();
  if (!o.config_path.empty()) {
    if ((st = bsbs_config_load_file(c, o.config_path.c_str())) != BSBS_OK) return st;
  }
  auto set = [c](const char* key, const std::string& value) {
    return bsbs_config_set(c, key, value.c_str());
  };
  if (o.out && (st = set("out", *o.out)) != BSBS_OK) return st;
  if (o.pair && (st = set("pair", *o.pair)) != BSBS_OK) return st;
  if (o.workers && (st = set("workers", std::to_string(*o.workers))) != BSBS_OK) return st;
  if (o.grid && (st = set("grid", std::to_string(*o.grid))) != BSBS_OK) return st;
  if (o.tol_residual) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *o.tol_residual);
    if ((st = set("tol_residual", buf)) != BSBS_OK) return st;
  }
  for (std::size_t i = 0; i < o.axes.size(); ++i) {
    const std::string key = "axis" + std::to_string(i + 1);
    if ((st = set(key.c_str(), o.axes[i])) != BSBS_OK) return st;
  }
  for (const auto& token : o.overrides) {
    if ((st = bsbs_config_apply_override(c, token.c_str())) != BSBS_OK) return st;
  }
  return bsbs_config_validate(c);
}

void print_point(const bsbs_config* config, const bsbs_point_result& r) {
  std::printf("pair:                %s\n", bsbs_config_pair(config));
  if (r.has_stability) {
    const auto& s = r.stability;
    std::printf("stable:              %s%s\n", s.stable ? "true" : "false",
                s.marginal ? " (marginal)" : "");
    std::printf("spectral abscissa:   %.10g\n", s.spectral_abscissa);
    for (int i = 0; i < 6; ++i) {
      std::printf("  eigenvalue %d:      %+.10g %+.10gi\n", i + 1,
                  s.eigen_real[i], s.eigen_imag[i]);
    }
  }
  if (r.has_solution) {
    std::printf("lyapunov residual:   %.3e\n", r.residual_norm);
    std::printf("physical:            %s\n", r.physical ? "true" : "false");
    if (r.asymmetry_warning) {
      std::printf("warning:             raw solution asymmetric above 1e-8\n");
    }
  }
  if (r.has_entanglement) {
    const auto& e = r.entanglement;
    std::printf("sigma:               %.12g\n", e.sigma);
    std::printf("det chi:             %.12g\n", e.det_chi);
    std::printf("nu_minus:            %.12g\n", e.nu_minus);
    if (e.unbounded) {
      std::printf("E_N:                 inf (nu_minus = 0)\n");
    } else {
      std::printf("E_N:                 %.12g\n", e.log_negativity);
    }
    std::printf("entangled:           %s\n", e.entangled ? "true" : "false");
    if (e.discriminant_clamped) {
      std::printf("warning:             negative discriminant clamped to 0\n");
    }
  }
}

int cmd_point(const CommonOptions& o) {
  ConfigPtr config;
  if (bsbs_status st = build_config(o, config); st != BSBS_OK) {
    return report_failure(st);
  }
  bsbs_point_result result;
  const bsbs_status st = bsbs_evaluate_point(config.get(), &result);
  const std::string failure = bsbs_last_error();
  print_point(config.get(), result);
  const std::string out = bsbs_config_output(config.get());
  if (!out.empty()) {
    if (bsbs_status w = bsbs_point_write_csv(&result, out.c_str()); w != BSBS_OK) {
      return report_failure(w);
    }
  }
  if (st != BSBS_OK) {
    std::fprintf(stderr, "bsbs: %s: %s\n", bsbs_status_string(st), failure.c_str());
    return exit_code_for(st);
  }
  return kExitOk;
}

int cmd_sweep(const CommonOptions& o) {
  if (o.axes.size() > 2) {
    std::fprintf(stderr, "bsbs: a sweep takes at most two --axis options\n");
    return kExitUsage;
  }
  ConfigPtr config;
  if (bsbs_status st = build_config(o, config); st != BSBS_OK) {
    return report_failure(st);
  }
  const std::string out = bsbs_config_output(config.get());
  if (out.empty()) {
    std::fprintf(stderr, "bsbs: sweep needs --out FILE (or out = FILE)\n");
    return kExitUsage;
  }
  bsbs_sweep* raw = nullptr;
  if (bsbs_status st = bsbs_sweep_run(config.get(), &raw); st != BSBS_OK) {
    return report_failure(st);
  }
  SweepPtr sweep(raw);
  if (bsbs_status st = bsbs_sweep_write_csv(sweep.get(), out.c_str()); st != BSBS_OK) {
    return report_failure(st);
  }
  std::size_t missing = 0;
  const std::size_t n = bsbs_sweep_size(sweep.get());
  for (std::size_t i = 0; i < n; ++i) {
    bsbs_sweep_record rec;
    bsbs_sweep_record_at(sweep.get(), i, &rec);
    missing += rec.has_e_n ? 0 : 1;
  }
  std::printf("wrote %zu points to %s (%zu without data)\n", n, out.c_str(), missing);
  return kExitOk;
}

int cmd_figure(const std::string& name, const CommonOptions& o) {
  ConfigPtr config;
  if (bsbs_status st = build_config(o, config); st != BSBS_OK) {
    return report_failure(st);
  }
  std::string dir = bsbs_config_output(config.get());
  if (dir.empty()) dir = ".";
  std::size_t missing = 0;
  if (bsbs_status st = bsbs_figure_run(name.c_str(), config.get(), dir.c_str(), &missing);
      st != BSBS_OK) {
    return report_failure(st);
  }
  std::printf("wrote %s/%s.csv and %s/%s.gp (%zu points without data)\n",
              dir.c_str(), name.c_str(), dir.c_str(), name.c_str(), missing);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state entanglement of a Brillouin/optomechanical three-mode system"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bsbs_version());

  CommonOptions point_opts, sweep_opts, figure_opts;
  std::string figure_name;

  auto* point = app.add_subcommand("point", "evaluate one parameter point");
  add_common(point, point_opts, /*with_axes=*/false, /*with_grid=*/false);

  auto* sweep = app.add_subcommand("sweep", "1D or 2D parameter sweep to CSV");
  add_common(sweep, sweep_opts, /*with_axes=*/true, /*with_grid=*/false);

  auto* figure = app.add_subcommand("figure", "reproduce a figure panel");
  std::string presets;
  for (std::size_t i = 0; i < bsbs_figure_count(); ++i) {
    presets += (i ? ", " : "") + std::string(bsbs_figure_name(i));
  }
  figure->add_option("name", figure_name, "preset: " + presets)->required();
  add_common(figure, figure_opts, /*with_axes=*/false, /*with_grid=*/true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*point) return cmd_point(point_opts);
  if (*sweep) return cmd_sweep(sweep_opts);
  return cmd_figure(figure_name, figure_opts);
}
