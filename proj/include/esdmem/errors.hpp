#pragma once

#include <stdexcept>
#include <string>

namespace esdmem {

// Bad caller input: out-of-range parameters, invalid qubit sets, shape mismatches.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine produced a result outside its accuracy contract.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a fidelity-at-threshold query is made for a metric with no ESD crossing.
class NoThresholdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace esdmem
