#ifndef HOMCART_ERRORS_HPP
#define HOMCART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homcart {

/// Malformed user input (dimensions, indices, file contents).
struct input_error : std::invalid_argument {
  explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A documented precondition of an operation does not hold.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A built object failed its own consistency checks.
struct construction_error : std::runtime_error {
  explicit construction_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace homcart

#endif
