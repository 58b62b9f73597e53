#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepform {

/// Input rejected by a precondition check (maps to CLI exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The system {P,Q} (or {H, dH/dy}) has a common factor, hence infinitely
/// many solutions.
class PositiveDimensional : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotSquarefree : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Raised when Lc_y is required to be a nonzero constant and is not.
class NonConstantLeadingCoefficient : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Lc_y(P) and Lc_y(Q) share a nontrivial factor.
class SharedLeadingFactor : public InvalidInput {
 public:
  SharedLeadingFactor(const std::string& factor)
      : InvalidInput("leading coefficients in y share the factor " + factor),
        factor_(factor) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

/// Non-prime modulus, or a characteristic too small for the requested
/// operation.
class InvalidModulus : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A configured iteration cap was hit before a result was certified.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An upstream contract was broken (wrong N, unlucky prime, impossible
/// branch). Indicates a bug or a caller passing inconsistent data.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sepform
