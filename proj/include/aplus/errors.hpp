#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aplus {

enum class ErrorKind {
  InvalidArgument,
  InvalidSeries,
  NearZeroConstantTerm,
  BranchCutProximity,
  SampleSingularity,
  MapConstructionFailure,
  QuadratureDivergence,
  RouteDisagreement,
  FitUnstable,
  IndexOverflow,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error raised by the workbench. The kind lets callers
/// (the report writer in particular) grade a failed check without string
/// matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Numerical errors signal insufficient resolution or an untrustworthy
  /// computation rather than a violated inequality.
  bool numerical() const noexcept {
    return kind_ != ErrorKind::InvalidArgument && kind_ != ErrorKind::InvalidSeries;
  }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidSeries: return "InvalidSeries";
    case ErrorKind::NearZeroConstantTerm: return "NearZeroConstantTerm";
    case ErrorKind::BranchCutProximity: return "BranchCutProximity";
    case ErrorKind::SampleSingularity: return "SampleSingularity";
    case ErrorKind::MapConstructionFailure: return "MapConstructionFailure";
    case ErrorKind::QuadratureDivergence: return "QuadratureDivergence";
    case ErrorKind::RouteDisagreement: return "RouteDisagreement";
    case ErrorKind::FitUnstable: return "FitUnstable";
    case ErrorKind::IndexOverflow: return "IndexOverflow";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace aplus
