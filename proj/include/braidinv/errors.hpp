#pragma once

#include <stdexcept>

namespace braidinv {

/// Base class of all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed word text: non-integer token, zero token, index out of range.
struct ParseError : Error {
  using Error::Error;
};

/// Structurally invalid arguments: strand-count or dimension mismatch,
/// bad move position or pattern, matrix not realizable as a pure braid.
struct InvalidArgument : Error {
  using Error::Error;
};

/// Permutation order exceeds the configured MAX_ORDER guard.
struct OrderGuardError : Error {
  using Error::Error;
};

/// Hard cost limit of an oracle exceeded.
struct CostGuardError : Error {
  using Error::Error;
};

}  // namespace braidinv
