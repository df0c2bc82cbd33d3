#pragma once

#include <stdexcept>
#include <string>

namespace aztec {

// Bad parameters: ranks, color counts, weight tuples, flags.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input that does not describe a valid object (tiling, particle array, JSON).
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Something that must hold by construction did not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace aztec
