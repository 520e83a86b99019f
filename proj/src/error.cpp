#include "smale/error.hpp"

namespace smale {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElementInRelation: return "UnknownElementInRelation";
    case ErrorCode::CycleInRelation: return "CycleInRelation";
    case ErrorCode::IsolatedElement: return "IsolatedElement";
    case ErrorCode::NotExtremal: return "NotExtremal";
    case ErrorCode::ConnectivityFailure: return "ConnectivityFailure";
    case ErrorCode::NoMediator: return "NoMediator";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::StarViolated: return "StarViolated";
    case ErrorCode::ExhaustionFailure: return "ExhaustionFailure";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::NotGradientShape: return "NotGradientShape";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace smale
