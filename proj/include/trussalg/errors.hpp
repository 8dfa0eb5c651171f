#pragma once

#include <stdexcept>
#include <string>

namespace trussalg {

// Structural misuse: mismatched carriers, malformed tables, bad parameters.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or table would exceed the configured size guard.
// Guards fail loudly; nothing is silently truncated.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Checked 64-bit integer arithmetic overflowed.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trussalg
