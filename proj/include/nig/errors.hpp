#pragma once

#include <stdexcept>
#include <string>

namespace nig {

/// Input outside the domain of a distribution parameter or function argument.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result not representable in double precision.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A quadrature failed to reach its tolerance within the node budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The direct steepest-descent quadrature was asked to evaluate a point where
/// the pole sits too close to the saddle (|nu - tau| too small).
class NearTransitionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The uniform F- expansion was requested where its pole parameter w is too
/// small to be trusted.
class UnreliableRegionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace nig
