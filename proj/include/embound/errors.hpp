#pragma once

#include <stdexcept>
#include <string>

namespace embound {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (log of zero,
/// negative radicand, theorem hypothesis not met).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input is valid but beyond what the implementation materializes
/// (exact factorial caps, enumeration sizes).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A certified comparison still overlapped at the maximum precision.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure (e.g. a matrix order exceeding Lagrange's cap).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace embound
