#pragma once

#include <stdexcept>
#include <string>

namespace bihcheck {

/// Point outside the chart, or too close to its boundary for a difference stencil.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters rejected by an operation's precondition (e.g. 4a = b^2 where a BCV
/// space proper is required).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Singular first fundamental form, parallel vectors spanning a plane, etc.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A difference stencil along a curve would leave the curve's parameter interval.
class StencilError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An integrated geodesic left the immersion's chart.
class ChartExit : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A surface expected to be invariant under the vertical field is not.
class InvarianceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bihcheck
