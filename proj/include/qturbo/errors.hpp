#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qturbo {

/// Operand sizes do not agree (qubit counts, stream lengths, slice layouts).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input was well-formed but violates a mathematical requirement
/// (non-symplectic matrix, catastrophic seed where one is refused, bad probability).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or counter would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A SISO message vanished: the syndrome has zero probability under the priors.
class DecodeFailure : public std::runtime_error {
 public:
  DecodeFailure(const std::string& what, std::size_t time_index)
      : std::runtime_error(what + " (time index " + std::to_string(time_index) + ")"),
        time_index_(time_index) {}

  std::size_t time_index() const { return time_index_; }

 private:
  std::size_t time_index_;
};

}  // namespace qturbo
