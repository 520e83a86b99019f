#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smale {

enum class ErrorCode {
  Io,
  Parse,
  DuplicateElement,
  UnknownElementInRelation,
  CycleInRelation,
  IsolatedElement,
  NotExtremal,
  ConnectivityFailure,
  NoMediator,
  PreconditionViolated,
  StarViolated,
  ExhaustionFailure,
  NonIntegralGenus,
  NotGradientShape,
  DisconnectedGraph,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace smale
