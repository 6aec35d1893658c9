#pragma once

#include <stdexcept>
#include <string>

namespace glossgraft {

enum class ErrorCode {
  MissingFile,
  ParseError,
  UnknownSynset,
  UnsupportedPos,
  EmptyGloss,
  NoAttachableWord,
  MismatchedId,
  InvalidArgument,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto gg_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace glossgraft
