#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycut {

enum class ErrorKind {
  EmptyResult,
  DegenerateResult,
  NonConvexInput,
  NotMidscribed,
  DepthOutOfRange,
  InconsistentParams,
  SingularSystem,
  NoRootInBracket,
  NonUniformResult,
  NotContained,
  NotProperSubset,
  InvalidName,
  MalformedFile,
};

std::string_view to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polycut
