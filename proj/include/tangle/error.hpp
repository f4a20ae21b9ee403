#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tangle {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (words, cycle notation, JSON documents).
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Arguments violate a precondition (rank/degree mismatch, out-of-range point,
/// invalid graph, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// The words supplied do not satisfy the distinct-powers hypothesis, or a
/// fixed-point precondition does not hold.
class HypothesisViolation : public Error {
public:
  using Error::Error;
};

/// Rejection sampling ran out of retries.
class SamplingError : public Error {
public:
  using Error::Error;
};

} // namespace tangle
