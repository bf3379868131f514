#pragma once

#include <stdexcept>
#include <string>

namespace morbit {

// Thrown on precondition violations (variant mismatch, malformed input,
// exceeded caps that cannot be reported as values).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace morbit
