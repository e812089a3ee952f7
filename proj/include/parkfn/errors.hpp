#pragma once

#include <stdexcept>

namespace parkfn {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad preference entries, out-of-range arguments,
// invalid index sets, precondition violations.
struct InvalidInput : Error {
  using Error::Error;
};

// A car probed past the last spot, i.e. the input was not a parking function.
struct ParkingFailure : Error {
  using Error::Error;
};

// Enumeration request beyond the configured bound.
struct LimitExceeded : Error {
  using Error::Error;
};

// Zero base raised to a negative exponent in an exact-rational evaluation.
struct PoleError : Error {
  using Error::Error;
};

// An identity the implementation relies on failed to hold; indicates a bug.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace parkfn
