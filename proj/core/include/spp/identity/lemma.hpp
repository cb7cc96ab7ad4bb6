#pragma once

#include "spp/exactalg/laurent_poly.hpp"

namespace spp::identity {

using exactalg::LaurentPoly;

// Two sides of a claimed identity, both in canonical form.
struct Sides {
  LaurentPoly lhs;
  LaurentPoly rhs;

  bool equal() const { return lhs == rhs; }
};

// prod_{i<j} (x_j - x_i) over x1..xn. Note the orientation: this is the
// Vandermonde of schur::vandermonde times (-1)^(n(n-1)/2).
LaurentPoly ascending_vandermonde(int n);

// LHS = x1...xn * sum_k (-1)^(k-1) (1 - x_k) x_k^-1 prod_{i!=k} (1 - x_i x_k)
//                                   * prod_{i<j; i,j != k} (x_j - x_i)
// RHS = (1 - x1...xn) * prod_{i<j} (x_j - x_i).
// Throws std::invalid_argument for n < 1.
Sides lemma_sides(int n);

// The lemma's left side divided by prod_{i<j} (x_j - x_i). Expected to be
// 1 - x1...xn. Throws NotDivisible if the left side is not antisymmetric.
LaurentPoly f_function(int n);

struct FBoundary {
  bool at_zero = false;  // F(0, x2, ..., xn) == 1
  bool at_one = false;   // F(1, x2, ..., xn) == F(x2, ..., xn)
};

FBoundary f_boundary_checks(int n);

}  // namespace spp::identity
