#include "bsbs/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bsbs/errors.hpp"

namespace bsbs {

namespace {

struct FieldEntry {
  std::string_view name;
  double SystemParams::*field;
};

constexpr FieldEntry kFields[] = {
    {"omega_m_hz", &SystemParams::omega_m_hz},
    {"delta_tilde", &SystemParams::delta_tilde},
    {"delta_a", &SystemParams::delta_a},
    {"kappa", &SystemParams::kappa},
    {"gamma_a", &SystemParams::gamma_a},
    {"gamma_m", &SystemParams::gamma_m},
    {"g_coupling_a", &SystemParams::g_coupling_a},
    {"g_coupling_m", &SystemParams::g_coupling_m},
    {"n_th", &SystemParams::n_th},
    {"j_m", &SystemParams::j_m},
    {"theta", &SystemParams::theta},
    {"g_single_m", &SystemParams::g_single_m},
    {"g_single_a", &SystemParams::g_single_a},
};

const FieldEntry* find_field(std::string_view key) {
  for (const auto& f : kFields) {
    if (f.name == key) return &f;
  }
  return nullptr;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (value.empty() || ec != std::errc() || ptr != end || !std::isfinite(out)) {
    throw Error(ErrorCode::kConfig, "invalid number '" + std::string(value) +
                                        "' for key '" + std::string(key) + "'");
  }
  return out;
}

int to_int(std::string_view key, std::string_view value) {
  int out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (value.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kConfig, "invalid integer '" + std::string(value) +
                                        "' for key '" + std::string(key) + "'");
  }
  return out;
}

void set_axis(RunConfig& config, std::size_t slot, std::string_view value) {
  const SweepAxis axis = SweepAxis::parse(value);
  if (config.axes.size() < slot) {
    throw Error(ErrorCode::kConfig, "axis2 given without axis1");
  }
  if (config.axes.size() == slot) {
    config.axes.push_back(axis);
  } else {
    config.axes[slot] = axis;
  }
}

}  // namespace

bool RunConfig::is_assigned(std::string_view key) const {
  return std::find(assigned.begin(), assigned.end(), key) != assigned.end();
}

std::vector<std::string_view> parameter_keys() {
  std::vector<std::string_view> keys;
  for (const auto& f : kFields) keys.push_back(f.name);
  return keys;
}

double get_param_field(const SystemParams& params, std::string_view key) {
  const FieldEntry* f = find_field(key);
  if (!f) {
    throw Error(ErrorCode::kConfig, "unknown parameter '" + std::string(key) + "'");
  }
  return params.*(f->field);
}

void set_param_field(SystemParams& params, std::string_view key, double value) {
  const FieldEntry* f = find_field(key);
  if (!f) {
    throw Error(ErrorCode::kConfig, "unknown parameter '" + std::string(key) + "'");
  }
  params.*(f->field) = value;
}

void apply_setting(RunConfig& config, std::string_view key,
                   std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (const FieldEntry* f = find_field(key)) {
    config.params.*(f->field) = to_double(key, value);
    if (!config.is_assigned(key)) config.assigned.emplace_back(key);
  } else if (key == "pair") {
    config.pair = ModePair::parse(value);
  } else if (key == "out") {
    config.output = std::string(value);
  } else if (key == "workers") {
    config.workers = to_int(key, value);
  } else if (key == "tol_residual") {
    config.tol_residual = to_double(key, value);
  } else if (key == "grid") {
    config.grid = to_int(key, value);
  } else if (key == "axis1") {
    set_axis(config, 0, value);
  } else if (key == "axis2") {
    set_axis(config, 1, value);
  } else {
    throw Error(ErrorCode::kConfig, "unknown key '" + std::string(key) + "'");
  }
}

void apply_override(RunConfig& config, std::string_view token) {
  const auto eq = token.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorCode::kConfig,
                "override '" + std::string(token) + "' is not key=value");
  }
  apply_setting(config, token.substr(0, eq), token.substr(eq + 1));
}

void parse_config_text(RunConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.npos
                                                                   : nl - pos);
    ++line_no;
    const auto line = trim(raw);
    if (!line.empty() && line.front() != '#') {
      const auto eq = line.find('=');
      try {
        if (eq == std::string_view::npos) {
          throw Error(ErrorCode::kConfig, "expected key = value");
        }
        apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
      } catch (const Error& e) {
        throw Error(e.code(),
                    "line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

void load_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read config file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    parse_config_text(config, buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void validate(const RunConfig& config) {
  try {
    config.params.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfig, e.what());
  }
  if (config.workers < 0) {
    throw Error(ErrorCode::kConfig, "workers must be >= 0");
  }
  if (!(config.tol_residual > 0.0)) {
    throw Error(ErrorCode::kConfig, "tol_residual must be > 0");
  }
  if (config.grid < 2) {
    throw Error(ErrorCode::kConfig, "grid must be >= 2");
  }
}

}  // namespace bsbs
