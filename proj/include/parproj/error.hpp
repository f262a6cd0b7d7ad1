#pragma once

#include <stdexcept>
#include <string>

namespace parproj {

enum class ErrorCode {
  InvalidArgument,
  DegenerateCubic,     // leading cubic coefficient is zero
  DegenerateQuadratic, // alpha == 0, the graph is a line
  InvalidModel,        // model outside the supported family (alpha <= 0 in n-D, c4 <= 0)
  InvalidOrdering,
  ZeroDirection,
  DimensionMismatch,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace parproj
