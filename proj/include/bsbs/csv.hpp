#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "bsbs/sweep.hpp"

namespace bsbs {

/// Bumped whenever a CSV column is renamed, added or reordered.
inline constexpr int kCsvSchemaVersion = 1;

/// Scientific notation with 17 significant digits; round-trips exactly.
std::string format_double(double value);
/// "NA" for a missing value.
std::string format_optional(const std::optional<double>& value);

/// Header: axis names, then
/// stable,e_n,nu_minus,spectral_abscissa,residual_norm,physical,error
std::string sweep_csv_header(std::span<const SweepAxis> axes);

void write_sweep_csv(std::ostream& out, std::span<const SweepAxis> axes,
                     std::span<const SweepRecord> records);

}  // namespace bsbs
