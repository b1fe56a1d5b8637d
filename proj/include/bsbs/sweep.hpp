#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsbs/entanglement.hpp"
#include "bsbs/errors.hpp"
#include "bsbs/lyapunov.hpp"
#include "bsbs/model.hpp"
#include "bsbs/stability.hpp"

namespace bsbs {

/// SystemParams fields that may be swept.
enum class Parameter {
  kDeltaA,
  kGCouplingA,
  kGCouplingM,
  kGammaA,
  kNTh,
  kKappa,
  kGammaM,
  kDeltaTilde,
};

std::string_view parameter_name(Parameter p);
/// Throws Error(kConfig) for names outside the sweepable set.
Parameter parse_parameter(std::string_view name);
double get_parameter(const SystemParams& params, Parameter p);
void set_parameter(SystemParams& params, Parameter p, double value);

/// Linearly spaced axis; the last point is exactly `stop`.
struct SweepAxis {
  Parameter parameter = Parameter::kGCouplingA;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;

  /// Throws Error(kConfig) unless start < stop, both finite, count >= 2.
  void validate() const;
  double value(int i) const;

  /// Parses "name:start:stop:count".
  static SweepAxis parse(std::string_view text);
};

/// Full pipeline at one parameter point. Pipeline failures are captured in
/// `error`/`message`; nothing here throws for numerical reasons.
struct PointResult {
  std::optional<StabilityReport> stability;
  std::optional<SolveReport> solve;
  std::optional<EntanglementResult> entanglement;
  bool physical = false;
  ErrorCode error = ErrorCode::kOk;
  std::string message;

  bool stable() const { return stability && stability->stable; }
};

PointResult evaluate_point(const SystemParams& params, const ModePair& pair,
                           const SolveOptions& options = {});

struct SweepRecord {
  std::array<double, 2> axis_values{};
  bool stable = false;
  bool marginal = false;
  /// Present iff the point is stable and the pipeline succeeded.
  std::optional<double> e_n;
  std::optional<double> nu_minus;
  std::optional<double> spectral_abscissa;
  std::optional<double> residual_norm;
  bool physical = false;
  ErrorCode error = ErrorCode::kOk;
};

SweepRecord make_record(const PointResult& point,
                        std::array<double, 2> axis_values);

struct SweepOptions {
  /// 0 selects std::thread::hardware_concurrency().
  int workers = 1;
  SolveOptions solve;
};

/// Evaluates every grid point, row-major with the first axis outermost.
/// Output does not depend on the worker count. Throws Error(kConfig) for
/// zero, more than two, duplicate or invalid axes, and the base parameter
/// validation error if `base` is invalid.
std::vector<SweepRecord> run_sweep(const SystemParams& base,
                                   std::span<const SweepAxis> axes,
                                   const ModePair& pair,
                                   const SweepOptions& options = {});

}  // namespace bsbs
