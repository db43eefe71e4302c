#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace septet {

enum class ErrorKind {
  ParseError,
  DegenerateInput,
  IdenticalArguments,
  PointNotOnLine,
  InvalidArgument,
  NotSimple,
  NotTypical,
  InvalidComponentCount,
  NotCyclic,
  UnknownCode,
  NotHeptagonal,
  CanonicalizationFailed,
  NotApplicable,
  Ambiguous,
  UnknownFingerprint,
  RepDegenerate,
  ClassMismatch,
  ImageDegenerate,
  SeedCorrupt,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so that callers (CLI exit
// codes, service error bodies) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace septet
