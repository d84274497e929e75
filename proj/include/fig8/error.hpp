#pragma once

#include <stdexcept>
#include <string>

namespace fig8 {

// Malformed or out-of-contract input (bad word syntax, wrong sizes, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well-formed but outside the mathematical domain of the operation
// (parabolic element where a hyperbolic one is needed, trivial word, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace fig8
