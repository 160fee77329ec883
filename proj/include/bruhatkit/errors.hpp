#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bruhatkit {

// Bad input: malformed matrices, unknown labels, inconsistent dimensions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weyl group enumeration would exceed the configured element cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("Weyl group enumeration exceeds the cap of " + std::to_string(cap) +
                           " elements"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

// A combinatorial identity that must hold failed. Always an implementation bug.
class IdentityCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Selects between the OpenMP kernel and the serial reference path.
enum class Exec { serial, parallel };

}  // namespace bruhatkit
