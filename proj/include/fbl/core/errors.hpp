#pragma once

#include <stdexcept>
#include <string>

namespace fbl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// argument outside the validity window of an operation
struct DomainError : Error {
  using Error::Error;
};

// two evaluation paths or a refinement disagree beyond tolerance
struct AccuracyError : Error {
  AccuracyError(const std::string& what, double achieved)
      : Error(what), achieved(achieved) {}
  double achieved;
};

struct ResolutionError : Error {
  using Error::Error;
};

// mass reached the edge of the computational domain
struct TruncationError : Error {
  TruncationError(const std::string& what, double needed_extent)
      : Error(what), needed_extent(needed_extent) {}
  double needed_extent;
};

struct ConsistencyError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct WindowError : Error {
  using Error::Error;
};

struct DivergenceError : Error {
  using Error::Error;
};

}  // namespace fbl
