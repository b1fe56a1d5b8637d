#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bsbs/entanglement.hpp"
#include "bsbs/model.hpp"
#include "bsbs/sweep.hpp"

namespace bsbs {

inline constexpr int kDefaultGrid = 61;

/// Everything a CLI command needs. Parsed from flat `key = value` text.
///
/// Recognized keys: every SystemParams field by name, `pair`, `out`,
/// `workers`, `tol_residual`, `grid`, `axis1`, `axis2`
/// (axis value: `name:start:stop:count`). Unknown keys are rejected.
struct RunConfig {
  SystemParams params;
  /// Names of the SystemParams fields set explicitly, in assignment order.
  std::vector<std::string> assigned;
  std::vector<SweepAxis> axes;
  ModePair pair = kOptomechanicalPair;
  std::string output;
  int workers = 0;
  double tol_residual = kDefaultResidualTolerance;
  int grid = kDefaultGrid;

  bool is_assigned(std::string_view key) const;
};

/// Names of all SystemParams fields accepted as configuration keys.
std::vector<std::string_view> parameter_keys();

/// Reads a SystemParams field by key; throws Error(kConfig) if unknown.
double get_param_field(const SystemParams& params, std::string_view key);
void set_param_field(SystemParams& params, std::string_view key, double value);

/// Applies one `key = value` setting. Throws Error(kConfig) for unknown keys
/// or unparsable values. Physical invariants are checked by `validate`.
void apply_setting(RunConfig& config, std::string_view key,
                   std::string_view value);

/// Applies a `key=value` token as given on the command line.
void apply_override(RunConfig& config, std::string_view token);

/// Parses config text on top of `config`. Blank lines and lines starting
/// with '#' are ignored. Error messages carry the line number.
void parse_config_text(RunConfig& config, std::string_view text);

/// Throws Error(kIo) if the file cannot be read.
void load_config_file(RunConfig& config, const std::filesystem::path& path);

/// Throws Error(kConfig) when the parameters or numeric settings are
/// invalid (for example a negative decay rate).
void validate(const RunConfig& config);

}  // namespace bsbs
