#include "glossgraft/error.hpp"

namespace glossgraft {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSynset: return "UnknownSynset";
    case ErrorCode::UnsupportedPos: return "UnsupportedPos";
    case ErrorCode::EmptyGloss: return "EmptyGloss";
    case ErrorCode::NoAttachableWord: return "NoAttachableWord";
    case ErrorCode::MismatchedId: return "MismatchedId";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace glossgraft
