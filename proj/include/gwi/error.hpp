#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gwi {

enum class ErrorCode {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  Parse,
  Disconnected,
  NotATree,
  NotBipartite,
  ClassRemovalNotTwoComponents,
  NotPartialCube,
  InfeasibleSpec,
  OutOfRange,
  OrderTooLarge,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; every library failure is one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gwi
