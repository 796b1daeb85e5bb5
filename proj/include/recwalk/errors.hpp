#pragma once

#include <stdexcept>
#include <string>

namespace recwalk {

/// Raised when caller-supplied parameters lie outside an operation's domain
/// (degenerate laws, rho out of range, LDP on a walk drifting to -infinity...).
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for malformed experiment configuration (unknown law kind, bad JSON).
class config_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a numerical routine cannot certify its own output.
class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok)
    throw precondition_error(what);
}

} // namespace recwalk
