#include "lingagree/error.hpp"

namespace lingagree {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::EmptyCollection: return "EmptyCollection";
    case ErrorCode::CombinatorialLimit: return "CombinatorialLimit";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::InvalidMembership: return "InvalidMembership";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::TooFewSources: return "TooFewSources";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::InvalidCuts: return "InvalidCuts";
    case ErrorCode::InvalidSamples: return "InvalidSamples";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::DuplicateResponse: return "DuplicateResponse";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::UnknownTerm: return "UnknownTerm";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace lingagree
