#pragma once

#include <stdexcept>

namespace g2e8 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The generated root system exceeded the bound for a finite type.
struct NonFiniteType : Error {
  using Error::Error;
};

/// A computation reached a state that should be impossible for valid input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace g2e8
