#include "parproj/error.hpp"

namespace parproj {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidArgument: return "invalid argument";
  case ErrorCode::DegenerateCubic: return "degenerate cubic";
  case ErrorCode::DegenerateQuadratic: return "degenerate quadratic";
  case ErrorCode::InvalidModel: return "invalid model";
  case ErrorCode::InvalidOrdering: return "invalid ordering";
  case ErrorCode::ZeroDirection: return "zero direction";
  case ErrorCode::DimensionMismatch: return "dimension mismatch";
  }
  return "unknown error";
}

} // namespace parproj
