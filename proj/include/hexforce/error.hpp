// Error type shared by every hexforce module.

#ifndef HEXFORCE_ERROR_HPP_
#define HEXFORCE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hexforce {

enum class ErrorKind {
  Empty,
  ParityViolation,
  Disconnected,
  NotSimplyConnected,
  UnknownHexagon,
  UnknownEdge,
  SyntaxError,
  NotASubset,
  NotAMatching,
  NoPerfectMatching,
  NotCatacondensed,
  NotAnECut,
  UncoveredNiceCycle,
  NotNormal,
  IsolatedVertex,
  InvalidSpec,
  LimitExceeded,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
    : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

} // namespace hexforce

#endif
