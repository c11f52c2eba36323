#pragma once

#include <stdexcept>
#include <string>

namespace dfly {

/// Base class of all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A value or operation fell outside the domain it is defined on
/// (mismatched scales, unknown values fed to a classical integral,
/// integrals over systems with zero divisors, ...).
struct DomainError : Error {
  using Error::Error;
};

/// An exhaustive enumeration was requested above the configured size guard.
/// The message carries an estimate of the refused search space.
struct GuardError : Error {
  using Error::Error;
};

/// Malformed input text (scale specs, capacity files, datasets).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace dfly
