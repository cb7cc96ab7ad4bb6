#pragma once

#include <stdexcept>

namespace spp::exactalg {

// Exact division left a nonzero remainder. Every ratio this library forms is
// claimed to be a polynomial, so this means a failed identity or a bug.
class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Determinant requested above the configured permutation-expansion bound.
class OrderTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed canonical polynomial text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spp::exactalg
