#pragma once

#include <stdexcept>
#include <string>

namespace bracketforge {

enum class ErrorCode {
  InvalidArgument = 1,
  NotSimple = 2,
  Degenerate = 3,
  Hypothesis = 4,
  Parse = 5,
  Io = 6,
  UnknownPreset = 7,
  DimensionMismatch = 8,
  Internal = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bracketforge
