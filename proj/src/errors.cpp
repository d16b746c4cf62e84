#include "polycut/errors.hpp"

namespace polycut {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::DegenerateResult: return "DegenerateResult";
    case ErrorKind::NonConvexInput: return "NonConvexInput";
    case ErrorKind::NotMidscribed: return "NotMidscribed";
    case ErrorKind::DepthOutOfRange: return "DepthOutOfRange";
    case ErrorKind::InconsistentParams: return "InconsistentParams";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NoRootInBracket: return "NoRootInBracket";
    case ErrorKind::NonUniformResult: return "NonUniformResult";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::NotProperSubset: return "NotProperSubset";
    case ErrorKind::InvalidName: return "InvalidName";
    case ErrorKind::MalformedFile: return "MalformedFile";
  }
  return "Unknown";
}

}  // namespace polycut
