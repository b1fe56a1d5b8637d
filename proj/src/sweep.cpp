#include "bsbs/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace bsbs {

namespace {

struct ParameterEntry {
  Parameter id;
  std::string_view name;
  double SystemParams::*field;
};

constexpr ParameterEntry kParameters[] = {
    {Parameter::kDeltaA, "delta_a", &SystemParams::delta_a},
    {Parameter::kGCouplingA, "g_coupling_a", &SystemParams::g_coupling_a},
    {Parameter::kGCouplingM, "g_coupling_m", &SystemParams::g_coupling_m},
    {Parameter::kGammaA, "gamma_a", &SystemParams::gamma_a},
    {Parameter::kNTh, "n_th", &SystemParams::n_th},
    {Parameter::kKappa, "kappa", &SystemParams::kappa},
    {Parameter::kGammaM, "gamma_m", &SystemParams::gamma_m},
    {Parameter::kDeltaTilde, "delta_tilde", &SystemParams::delta_tilde},
};

const ParameterEntry& entry(Parameter p) {
  return kParameters[static_cast<std::size_t>(p)];
}

double parse_number(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::kConfig, "invalid " + std::string(what) + " '" +
                                        std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view parameter_name(Parameter p) { return entry(p).name; }

Parameter parse_parameter(std::string_view name) {
  for (const auto& e : kParameters) {
    if (e.name == name) return e.id;
  }
  throw Error(ErrorCode::kConfig,
              "unknown sweep parameter '" + std::string(name) + "'");
}

double get_parameter(const SystemParams& params, Parameter p) {
  return params.*(entry(p).field);
}

void set_parameter(SystemParams& params, Parameter p, double value) {
  params.*(entry(p).field) = value;
}

void SweepAxis::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
    throw Error(ErrorCode::kConfig, "axis " +
                                        std::string(parameter_name(parameter)) +
                                        ": need finite start < stop");
  }
  if (count < 2) {
    throw Error(ErrorCode::kConfig, "axis " +
                                        std::string(parameter_name(parameter)) +
                                        ": need at least 2 points");
  }
}

double SweepAxis::value(int i) const {
  if (i == count - 1) return stop;
  return start + (stop - start) * static_cast<double>(i) /
                     static_cast<double>(count - 1);
}

SweepAxis SweepAxis::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 4) {
    throw Error(ErrorCode::kConfig, "axis '" + std::string(text) +
                                        "' must look like name:start:stop:count");
  }
  SweepAxis axis;
  axis.parameter = parse_parameter(parts[0]);
  axis.start = parse_number(parts[1], "axis start");
  axis.stop = parse_number(parts[2], "axis stop");
  const double count = parse_number(parts[3], "axis count");
  if (count != std::floor(count) || count > 1e7) {
    throw Error(ErrorCode::kConfig, "axis count must be an integer");
  }
  axis.count = static_cast<int>(count);
  axis.validate();
  return axis;
}

PointResult evaluate_point(const SystemParams& params, const ModePair& pair,
                           const SolveOptions& options) {
  PointResult out;
  try {
    const DriftMatrix a = build_drift_matrix(params);
    const DiffusionMatrix d = build_diffusion_matrix(params);
    out.stability = assess_stability(a);
    if (!out.stability->stable) {
      out.error = ErrorCode::kUnstable;
      out.message = out.stability->marginal ? "marginally stable drift matrix"
                                            : "drift matrix is not Hurwitz";
      return out;
    }
    out.solve = solve_steady_covariance(a, d, options);
    out.physical = physicality_check(out.solve->covariance);
    out.entanglement = logarithmic_negativity(
        extract_pair_covariance(out.solve->covariance, pair));
  } catch (const Error& e) {
    out.error = e.code();
    out.message = e.what();
    out.entanglement.reset();
  }
  return out;
}

SweepRecord make_record(const PointResult& point,
                        std::array<double, 2> axis_values) {
  SweepRecord r;
  r.axis_values = axis_values;
  r.error = point.error;
  if (point.stability) {
    r.stable = point.stability->stable;
    r.marginal = point.stability->marginal;
    r.spectral_abscissa = point.stability->spectral_abscissa;
  }
  if (point.solve) r.residual_norm = point.solve->residual_norm;
  r.physical = point.physical;
  if (point.entanglement && point.error == ErrorCode::kOk) {
    r.e_n = point.entanglement->log_negativity;
    r.nu_minus = point.entanglement->nu_minus;
  }
  return r;
}

std::vector<SweepRecord> run_sweep(const SystemParams& base,
                                   std::span<const SweepAxis> axes,
                                   const ModePair& pair,
                                   const SweepOptions& options) {
  if (axes.empty() || axes.size() > 2) {
    throw Error(ErrorCode::kConfig, "a sweep needs one or two axes");
  }
  for (const auto& axis : axes) axis.validate();
  if (axes.size() == 2 && axes[0].parameter == axes[1].parameter) {
    throw Error(ErrorCode::kConfig,
                "duplicate sweep parameter '" +
                    std::string(parameter_name(axes[0].parameter)) + "'");
  }
  base.validate();

  const std::size_t inner =
      axes.size() == 2 ? static_cast<std::size_t>(axes[1].count) : 1;
  const std::size_t total = static_cast<std::size_t>(axes[0].count) * inner;
  std::vector<SweepRecord> records(total);

  auto evaluate_index = [&](std::size_t index) {
    SystemParams params = base;
    std::array<double, 2> values{};
    values[0] = axes[0].value(static_cast<int>(index / inner));
    set_parameter(params, axes[0].parameter, values[0]);
    if (axes.size() == 2) {
      values[1] = axes[1].value(static_cast<int>(index % inner));
      set_parameter(params, axes[1].parameter, values[1]);
    }
    records[index] =
        make_record(evaluate_point(params, pair, options.solve), values);
  };

  unsigned workers = options.workers > 0
                         ? static_cast<unsigned>(options.workers)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));

  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) evaluate_index(i);
    return records;
  }

  // Dynamic scheduling: each worker claims the next unevaluated index.
  // Results land at their index, so completion order does not matter.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next.fetch_add(1); i < total;
               i = next.fetch_add(1)) {
            evaluate_index(i);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(total);
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

}  // namespace bsbs
