#pragma once

#include <stdexcept>
#include <string>

namespace plk {

// Malformed or out-of-contract arguments supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical invariant that must hold failed to hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace plk
