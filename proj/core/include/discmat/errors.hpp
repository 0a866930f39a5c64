#pragma once

#include <stdexcept>
#include <string>

namespace discmat {

/// Operands built for different coefficient rings (different a-variable counts).
class VarcountMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// exact_div found a nonzero remainder. Inside the formula builders this
/// always means a construction bug.
class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A determinant relation could not be established (non-exact quotient or a
/// ratio that is not constant across sample points).
class FormulaVerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace discmat
