#pragma once

#include <stdexcept>
#include <string>

namespace mobius {

/// Malformed user input: bad key text, bad files, invalid parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A key from one poset family was handed to an operation on another.
class FamilyMismatch : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace mobius
