#include "bsbs/csv.hpp"

#include <cmath>
#include <cstdio>

namespace bsbs {

std::string format_double(double value) {
  if (std::isnan(value)) return "NA";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_double(*value) : "NA";
}

std::string sweep_csv_header(std::span<const SweepAxis> axes) {
  std::string header;
  for (const auto& axis : axes) {
    header += parameter_name(axis.parameter);
    header += ',';
  }
  header +=
      "stable,e_n,nu_minus,spectral_abscissa,residual_norm,physical,error";
  return header;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepAxis> axes,
                     std::span<const SweepRecord> records) {
  out << sweep_csv_header(axes) << '\n';
  for (const auto& r : records) {
    for (std::size_t i = 0; i < axes.size(); ++i) {
      out << format_double(r.axis_values[i]) << ',';
    }
    out << (r.stable ? 1 : 0) << ',' << format_optional(r.e_n) << ','
        << format_optional(r.nu_minus) << ','
        << format_optional(r.spectral_abscissa) << ','
        << format_optional(r.residual_norm) << ',' << (r.physical ? 1 : 0)
        << ',' << error_code_name(r.error) << '\n';
  }
}

}  // namespace bsbs
