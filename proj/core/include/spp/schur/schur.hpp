#pragma once

#include "spp/combinat/partition.hpp"
#include "spp/exactalg/determinant.hpp"
#include "spp/exactalg/laurent_poly.hpp"

namespace spp::schur {

using exactalg::LaurentPoly;

// The m x n box: partitions with at most n parts, each at most m, in the
// variables x1..xn. Zero sides are accepted; every box quantity is then 1.
struct BoxParams {
  int m = 1;
  int n = 1;

  // Throws std::invalid_argument for negative sides.
  void validate() const;
};

// Sum over semistandard tableaux T of the shape with entries in 1..n of the
// product of x_e over entries e. Zero when the shape has more than n rows.
LaurentPoly schur_via_tableaux(const combinat::Partition& shape, int n);

// det(x_i^(shape_j + n - j)) / prod_{i<j} (x_i - x_j), with the shape padded
// by zeros to n parts. Zero when the shape has more than n rows.
LaurentPoly schur_via_bialternant(const combinat::Partition& shape, int n);

// prod_{i<j} (x_i - x_j) over x1..xn.
LaurentPoly vandermonde(int n);

enum class SchurBackend { tableaux, bialternant };

// Sum of s_lambda(x1..xn) over all lambda in the m x n box.
LaurentPoly schur_box_sum(BoxParams p, SchurBackend backend = SchurBackend::tableaux);

// The matrix (x_i^(j-1) - x_i^(m+2n-j)).
exactalg::PolyMatrix box_numerator_matrix(BoxParams p);

// det(x_i^(j-1) - x_i^(m+2n-j)) / det(x_i^(j-1) - x_i^(2n-j)), computed by
// exact division. Throws NotDivisible if the ratio is not a polynomial.
LaurentPoly box_det_ratio(BoxParams p);

}  // namespace spp::schur
