#pragma once

#include <stdexcept>
#include <string>

namespace mapstrip {

enum class ErrorCode {
  bad_argument,
  parse,
  config,
  outside_domain,
  indeterminate_point,
  empty_grid,
  boundary_zero,
  non_integer_winding,
  newton_stall,
  disjoint_windows,
  window_overrun,
  precondition_violated,
  non_monotone,
  window_too_small,
  basis_mismatch,
  unclassifiable_component,
  assertion_failed,
  io,
  internal,
};

const char* error_code_name(ErrorCode code);

/// Base of all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct BadArgument : Error {
  explicit BadArgument(const std::string& m) : Error(ErrorCode::bad_argument, m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(ErrorCode::parse, m) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error(ErrorCode::config, m) {}
};
struct OutsideDomain : Error {
  explicit OutsideDomain(const std::string& m) : Error(ErrorCode::outside_domain, m) {}
};
struct IndeterminatePoint : Error {
  explicit IndeterminatePoint(const std::string& m)
      : Error(ErrorCode::indeterminate_point, m) {}
};
struct EmptyGrid : Error {
  explicit EmptyGrid(const std::string& m) : Error(ErrorCode::empty_grid, m) {}
};
struct BoundaryZero : Error {
  explicit BoundaryZero(const std::string& m) : Error(ErrorCode::boundary_zero, m) {}
};
struct NonIntegerWinding : Error {
  explicit NonIntegerWinding(const std::string& m)
      : Error(ErrorCode::non_integer_winding, m) {}
};
struct NewtonStall : Error {
  explicit NewtonStall(const std::string& m) : Error(ErrorCode::newton_stall, m) {}
};
struct DisjointWindows : Error {
  explicit DisjointWindows(const std::string& m)
      : Error(ErrorCode::disjoint_windows, m) {}
};
struct WindowOverrun : Error {
  explicit WindowOverrun(const std::string& m) : Error(ErrorCode::window_overrun, m) {}
};
struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& m)
      : Error(ErrorCode::precondition_violated, m) {}
};
struct NonMonotone : Error {
  explicit NonMonotone(const std::string& m) : Error(ErrorCode::non_monotone, m) {}
};
struct WindowTooSmall : Error {
  explicit WindowTooSmall(const std::string& m)
      : Error(ErrorCode::window_too_small, m) {}
};
struct BasisMismatch : Error {
  explicit BasisMismatch(const std::string& m) : Error(ErrorCode::basis_mismatch, m) {}
};
struct UnclassifiableComponent : Error {
  explicit UnclassifiableComponent(const std::string& m)
      : Error(ErrorCode::unclassifiable_component, m) {}
};
struct AssertionFailed : Error {
  explicit AssertionFailed(const std::string& m)
      : Error(ErrorCode::assertion_failed, m) {}
};
struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ErrorCode::io, m) {}
};

}  // namespace mapstrip
