#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsbs/config.hpp"
#include "bsbs/sweep.hpp"

namespace bsbs {

enum class PanelKind { kMap, kLineCut };

/// A reproducible figure panel: fixed parameter values on top of the
/// reference point, plus one 2D map or a family of 1D line cuts.
struct FigurePreset {
  std::string name;
  std::string title;
  PanelKind kind = PanelKind::kMap;
  std::vector<std::pair<Parameter, double>> fixed;
  /// Two axes for a map, one for a line cut. Counts are replaced by the
  /// configured grid size.
  std::vector<SweepAxis> axes;
  /// Line cuts only: one curve per value of this parameter.
  std::optional<Parameter> curve_parameter;
  std::vector<double> curve_values;
};

std::span<const FigurePreset> figure_presets();

/// Throws Error(kPresetNotFound).
const FigurePreset& find_figure(std::string_view name);

struct FigureData {
  FigurePreset preset;
  SystemParams base;
  ModePair pair = kOptomechanicalPair;
  /// One record list per curve; a map has exactly one.
  std::vector<std::vector<SweepRecord>> curves;
};

/// Reference parameters, then the preset's fixed values, then every
/// parameter the config assigned explicitly.
SystemParams figure_base(const FigurePreset& preset, const RunConfig& config);

FigureData run_figure(std::string_view name, const RunConfig& config);

/// Map: columns (axis1, axis2, e_n). Line cut: (axis, e_n@v1, e_n@v2, ...).
void write_figure_csv(std::ostream& out, const FigureData& data);

/// Gnuplot commands that plot `csv_name`.
std::string figure_plot_script(const FigureData& data,
                               const std::string& csv_name);

/// Writes <dir>/<name>.csv and <dir>/<name>.gp, creating `dir` if needed.
/// Returns the paths written. Throws Error(kIo).
std::vector<std::filesystem::path> write_figure(
    const FigureData& data, const std::filesystem::path& dir);

}  // namespace bsbs
