#pragma once

#include <stdexcept>
#include <string>

namespace gw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at offset " + std::to_string(pos)), position(pos) {}
};

struct ContextError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// A bounded computation could not decide; carries the bound that was in force.
struct InconclusiveError : Error {
  int bound;
  InconclusiveError(const std::string& msg, int b)
      : Error(msg + " (bound " + std::to_string(b) + ")"), bound(b) {}
};

}  // namespace gw
