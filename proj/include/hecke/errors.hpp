#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Argument outside the region where a series or formula is valid.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// |tr| <= 2: the element has no displacement length.
struct NotHyperbolicError : std::domain_error {
  using std::domain_error::domain_error;
};

// A matrix entry left the representable range during composition.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// An iterative scheme failed to contract at the requested point.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Successive zero estimates of the k-ladder stopped converging.
struct LadderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Self-consistency of the a-priori lower bound could not be established.
struct PriorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hecke
