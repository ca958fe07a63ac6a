#pragma once

#include <stdexcept>
#include <string>

namespace cjepa {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteError : Error {
  using Error::Error;
};
struct NonSymmetricError : Error {
  using Error::Error;
};
struct BatchTooSmallError : Error {
  using Error::Error;
};
struct ShapeMismatchError : Error {
  using Error::Error;
};
struct TooFewBlocksError : Error {
  using Error::Error;
};
struct GridTooSmallError : Error {
  using Error::Error;
};
struct EmptyContextError : Error {
  using Error::Error;
};
struct EmptyTargetsError : Error {
  using Error::Error;
};
struct NoCachedForwardError : Error {
  using Error::Error;
};
struct MomentumOutOfRangeError : Error {
  using Error::Error;
};
struct NegativeEigenvalueError : Error {
  using Error::Error;
};
struct StepTooLargeError : Error {
  using Error::Error;
};
struct StepOutOfRangeError : Error {
  using Error::Error;
};
struct NonFiniteLossError : Error {
  int step = -1;
  explicit NonFiniteLossError(const std::string& msg, int failing_step = -1)
      : Error(msg), step(failing_step) {}
};
struct MisalignedLogsError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace cjepa
