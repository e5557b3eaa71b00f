#pragma once

#include <stdexcept>
#include <string>

namespace minigolf {

enum class ErrorCode {
  Schema,
  Geometry,
  NoMatch,
  AmbiguousGoal,
  UnknownId,
  Config,
  NoRoute,
  NoRemedy,
  EmptyDataset,
  DegenerateContact,
  BracketCollapsed,
  Unreachable,
  JointLimit,
  VelocityLimit,
  Io,
};

const char* error_code_name(ErrorCode code);

/// Library error carrying a machine-readable code and, where it helps,
/// a path to the offending document element.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string path = {})
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        code_(code),
        path_(std::move(path)) {}

  ErrorCode code() const { return code_; }
  const std::string& path() const { return path_; }

 private:
  ErrorCode code_;
  std::string path_;
};

}  // namespace minigolf
