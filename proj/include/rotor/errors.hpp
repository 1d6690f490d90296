#pragma once

#include <stdexcept>
#include <string>

namespace rotor {

enum class ErrorKind {
  NonUnitAxis,
  NotSpecialUnitary,
  NotUnitary,
  ZeroSpinor,
  ImpossibleBranch,
};

const char* to_string(ErrorKind kind);

// Single exception type for the numerical core; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rotor
