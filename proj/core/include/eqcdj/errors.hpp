// errors.hpp — exception types for input validation, capacity limits, grid preconditions

#pragma once

#include <stdexcept>
#include <string>

namespace eqcdj {

// Malformed input: bad truth table, unnormalized coherent-state amplitudes,
// out-of-range Fock labels, and similar caller mistakes.
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// A requested object is bigger than a configured cap (state dimension,
// density-matrix dimension, enumeration size).
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A sweep or fit grid violates a precondition (odd particle counts where the
// curve is identically zero, too few points, non-monotone grid).
class grid_error : public std::invalid_argument {
 public:
  explicit grid_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace eqcdj
