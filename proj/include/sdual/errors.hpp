#pragma once

#include <stdexcept>
#include <string>

namespace sdual {

/// Caller-supplied input violated a documented precondition
/// (bad rank, mismatched surfaces, malformed flag values, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A configured resource limit was exceeded (weight-multiplicity cap,
/// search-space guard, ...). The message names the limit.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An identity the library guarantees by construction failed to hold.
/// Indicates a bug, never user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw DomainError(msg);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

inline void internal_check(bool cond, const char* msg) {
  if (!cond) throw InternalError(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace sdual
