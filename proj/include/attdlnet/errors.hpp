#pragma once

#include <stdexcept>
#include <string>

namespace attdlnet {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape or axis mismatch between tensors / images / descriptors.
struct DimensionError : Error {
  using Error::Error;
};

/// Malformed input file (bad magic, truncation, unparseable field).
/// The message carries a byte offset or line number where applicable.
struct ParseError : Error {
  using Error::Error;
};

/// Invalid configuration (out-of-range value, unknown key, inconsistent combo).
struct ConfigError : Error {
  using Error::Error;
};

/// A documented precondition was violated by the caller.
struct ContractError : Error {
  using Error::Error;
};

/// Random sampling could not satisfy its constraints within bounded retries.
struct SamplingError : Error {
  using Error::Error;
};

}  // namespace attdlnet
