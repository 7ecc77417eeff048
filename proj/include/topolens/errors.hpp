#pragma once

#include <stdexcept>
#include <string>

namespace topolens {

/// Malformed or out-of-range user input (bad JSON, point out of range,
/// a family of sets that is not a topology, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The instance exceeds an enumeration cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Two independent computations of the same quantity disagreed, or a law
/// that must hold on every instance failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace topolens
