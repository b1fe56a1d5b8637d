#include "bsbs/figures.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bsbs/csv.hpp"
#include "bsbs/errors.hpp"

namespace bsbs {

namespace {

// Axis ranges bracket every threshold discussed for the panels.
constexpr SweepAxis kGa{Parameter::kGCouplingA, 0.0, 0.3, kDefaultGrid};
constexpr SweepAxis kDeltaA{Parameter::kDeltaA, 0.5, 1.5, kDefaultGrid};
constexpr SweepAxis kGammaA{Parameter::kGammaA, 0.01, 0.6, kDefaultGrid};
constexpr SweepAxis kGm{Parameter::kGCouplingM, 0.0, 0.3, kDefaultGrid};
constexpr SweepAxis kNth{Parameter::kNTh, 0.0, 250.0, kDefaultGrid};

const std::vector<FigurePreset>& presets() {
  static const std::vector<FigurePreset> all = {
      {"fig2", "E_N versus G_a and Delta_a", PanelKind::kMap, {}, {kGa, kDeltaA},
       std::nullopt, {}},
      {"fig3a", "E_N versus gamma_a and G_a", PanelKind::kMap,
       {{Parameter::kDeltaA, 1.0}}, {kGammaA, kGa}, std::nullopt, {}},
      {"fig3b", "E_N versus gamma_a for several G_a", PanelKind::kLineCut,
       {{Parameter::kDeltaA, 1.0}}, {kGammaA}, Parameter::kGCouplingA,
       {0.15, 0.2, 0.3}},
      {"fig4a", "E_N versus G_m and G_a", PanelKind::kMap,
       {{Parameter::kDeltaA, 1.0}}, {kGm, kGa}, std::nullopt, {}},
      {"fig4b", "E_N versus G_m for several G_a", PanelKind::kLineCut,
       {{Parameter::kDeltaA, 1.0}}, {kGm}, Parameter::kGCouplingA,
       {0.12, 0.15, 0.2}},
      {"fig5a", "E_N versus n_th and G_m", PanelKind::kMap,
       {{Parameter::kDeltaA, 1.0}, {Parameter::kGCouplingA, 0.2}}, {kNth, kGm},
       std::nullopt, {}},
      {"fig5b", "E_N versus G_m for several n_th", PanelKind::kLineCut,
       {{Parameter::kDeltaA, 1.0}, {Parameter::kGCouplingA, 0.2}}, {kGm},
       Parameter::kNTh, {20.0, 100.0, 200.0}},
  };
  return all;
}

std::string curve_label(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "e_n@%g", value);
  return buf;
}

}  // namespace

std::span<const FigurePreset> figure_presets() { return presets(); }

const FigurePreset& find_figure(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::kPresetNotFound,
              "unknown figure preset '" + std::string(name) +
                  "' (expected fig2, fig3a, fig3b, fig4a, fig4b, fig5a, fig5b)");
}

SystemParams figure_base(const FigurePreset& preset, const RunConfig& config) {
  SystemParams base;
  for (const auto& [parameter, value] : preset.fixed) {
    set_parameter(base, parameter, value);
  }
  for (const auto& key : config.assigned) {
    set_param_field(base, key, get_param_field(config.params, key));
  }
  return base;
}

FigureData run_figure(std::string_view name, const RunConfig& config) {
  validate(config);
  FigureData data;
  data.preset = find_figure(name);
  for (auto& axis : data.preset.axes) axis.count = config.grid;
  data.base = figure_base(data.preset, config);
  data.pair = config.pair;

  SweepOptions options;
  options.workers = config.workers;
  options.solve.residual_tolerance = config.tol_residual;

  if (data.preset.kind == PanelKind::kMap) {
    data.curves.push_back(
        run_sweep(data.base, data.preset.axes, data.pair, options));
  } else {
    for (double value : data.preset.curve_values) {
      SystemParams params = data.base;
      set_parameter(params, *data.preset.curve_parameter, value);
      data.curves.push_back(
          run_sweep(params, data.preset.axes, data.pair, options));
    }
  }
  return data;
}

void write_figure_csv(std::ostream& out, const FigureData& data) {
  const auto& axes = data.preset.axes;
  if (data.preset.kind == PanelKind::kMap) {
    out << parameter_name(axes[0].parameter) << ','
        << parameter_name(axes[1].parameter) << ",e_n\n";
    for (const auto& r : data.curves.front()) {
      out << format_double(r.axis_values[0]) << ','
          << format_double(r.axis_values[1]) << ',' << format_optional(r.e_n)
          << '\n';
    }
    return;
  }
  out << parameter_name(axes[0].parameter);
  for (double v : data.preset.curve_values) out << ',' << curve_label(v);
  out << '\n';
  const std::size_t rows = data.curves.front().size();
  for (std::size_t i = 0; i < rows; ++i) {
    out << format_double(data.curves.front()[i].axis_values[0]);
    for (const auto& curve : data.curves) out << ',' << format_optional(curve[i].e_n);
    out << '\n';
  }
}

std::string figure_plot_script(const FigureData& data,
                               const std::string& csv_name) {
  const auto& p = data.preset;
  std::ostringstream gp;
  gp << "# gnuplot script for " << p.name << ": " << p.title << "\n"
     << "set datafile separator ','\n"
     << "set datafile missing 'NA'\n"
     << "set terminal pngcairo size 800,600\n"
     << "set output '" << p.name << ".png'\n"
     << "set title '" << p.title << "'\n"
     << "set xlabel '" << parameter_name(p.axes[0].parameter) << "'\n";
  if (p.kind == PanelKind::kMap) {
    gp << "set ylabel '" << parameter_name(p.axes[1].parameter) << "'\n"
       << "set cblabel 'E_N'\n"
       << "set palette rgbformulae 33,13,10\n"
       << "plot '" << csv_name
       << "' skip 1 using 1:2:3 with points pt 5 ps 1 palette notitle\n";
  } else {
    gp << "set ylabel 'E_N'\n"
       << "set key autotitle columnhead\n"
       << "plot";
    for (std::size_t c = 0; c < p.curve_values.size(); ++c) {
      gp << (c == 0 ? " '" + csv_name + "'" : ", ''") << " using 1:" << c + 2
         << " with lines lw 2";
    }
    gp << "\n";
  }
  return gp.str();
}

std::vector<std::filesystem::path> write_figure(
    const FigureData& data, const std::filesystem::path& dir) {
  std::error_code ec;
  if (!dir.empty()) std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot create directory " + dir.string() + ": " + ec.message());
  }
  const std::string csv_name = data.preset.name + ".csv";
  const auto csv_path = dir / csv_name;
  const auto gp_path = dir / (data.preset.name + ".gp");

  auto write = [](const std::filesystem::path& path, auto&& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    body(out);
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "error writing " + path.string());
  };
  write(csv_path, [&](std::ostream& o) { write_figure_csv(o, data); });
  write(gp_path, [&](std::ostream& o) { o << figure_plot_script(data, csv_name); });
  return {csv_path, gp_path};
}

}  // namespace bsbs
