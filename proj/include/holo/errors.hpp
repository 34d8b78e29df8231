#pragma once

#include <stdexcept>
#include <string>

namespace holo {

/// Invalid parameter pack or out-of-range argument.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A non-finite value showed up where a finite one was required.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weight times integrand is not a decaying Gaussian, so no quadrature
/// envelope exists. Almost always a caller bug: the bare Xs weight grows
/// along the real axis.
class EnvelopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal identity that holds by construction was violated.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace holo
