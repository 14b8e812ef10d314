#include "yuppie/error.hpp"

namespace yuppie {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::UnresolvedHole: return "UnresolvedHole";
    case ErrorKind::BadPhase: return "BadPhase";
    case ErrorKind::UnknownMacro: return "UnknownMacro";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::IllTyped: return "IllTyped";
    case ErrorKind::NotLiftable: return "NotLiftable";
    case ErrorKind::NotInhabited: return "NotInhabited";
    case ErrorKind::GarbageUninhabited: return "GarbageUninhabited";
    case ErrorKind::NotClassical: return "NotClassical";
    case ErrorKind::EmptyCodomain: return "EmptyCodomain";
    case ErrorKind::BadState: return "BadState";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::BranchMismatch: return "BranchMismatch";
    case ErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ErrorKind::ContextShape: return "ContextShape";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownDefinition: return "UnknownDefinition";
    case ErrorKind::RecursiveDefinition: return "RecursiveDefinition";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace yuppie
