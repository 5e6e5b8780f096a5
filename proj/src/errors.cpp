#include "wkb/errors.hpp"

namespace wkb {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Domain: return "DomainError";
    case ErrorCode::Precondition: return "PreconditionError";
    case ErrorCode::NoClassicalRegion: return "NoClassicalRegion";
    case ErrorCode::SingleTurningPoint: return "SingleTurningPoint";
    case ErrorCode::MultiWell: return "MultiWell";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NoBoundState: return "NoBoundState";
    case ErrorCode::TurningPointSingularity: return "TurningPointSingularity";
    case ErrorCode::NodeCountMismatch: return "NodeCountMismatch";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
  }
  return "UnknownError";
}

}  // namespace wkb
