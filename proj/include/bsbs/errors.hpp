#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bsbs {

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
  kOk = 0,
  kDomain,          // argument outside the mathematical domain of an operation
  kUnsupported,     // model feature deliberately not implemented
  kConfig,          // malformed or unknown configuration
  kPresetNotFound,  // unknown figure preset
  kIo,              // file could not be read or written
  kUnstable,        // drift matrix is not Hurwitz
  kSingular,        // linear system could not be solved
  kDivergence,      // transient integration produced non-finite values
  kUnphysical,      // covariance violates the uncertainty relation
  kNumerical,       // other numerical failure (eigen-solver, residual)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "ok";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kPresetNotFound: return "preset-not-found";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kUnstable: return "unstable";
    case ErrorCode::kSingular: return "singular";
    case ErrorCode::kDivergence: return "divergence";
    case ErrorCode::kUnphysical: return "unphysical";
    case ErrorCode::kNumerical: return "numerical";
  }
  return "unknown";
}

}  // namespace bsbs
