#pragma once

#include <stdexcept>
#include <string>

namespace nswopt {

// Invalid arguments, malformed files, violated schema invariants.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally unsolvable input (e.g. inadequate capacities).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// Work limit exceeded (enumeration budgets, column caps).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nswopt
