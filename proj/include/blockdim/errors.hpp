#pragma once

#include <stdexcept>

namespace blockdim {

/// Bad user input: malformed numbers, unsupported Cartan types, non-dominant
/// parameters, weights outside the required coset. The CLI maps this to exit 1.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Enumeration of a Coxeter group stopped at the configured cap.
class GroupTooLarge : public InputError {
public:
  using InputError::InputError;
};

/// A computed quantity contradicts an identity that must hold (negative
/// projective multiplicity, non-unitriangular block matrix, ...). Exit 2.
class InconsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace blockdim
