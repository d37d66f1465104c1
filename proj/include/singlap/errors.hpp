#pragma once

#include <stdexcept>
#include <string>

namespace singlap {

// Bad arguments or configuration. The CLI maps this to exit code 2.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A user-supplied callable returned non-finite data.
class EvaluationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Numerical failure (quadrature non-convergence, ill-conditioned input).
// The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ConditioningError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// Rejection sampler could not reach a workable acceptance rate.
class ProposalMismatchError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace singlap
