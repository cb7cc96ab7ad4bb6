#pragma once

#include <string>
#include <vector>

#include "spp/exactalg/laurent_poly.hpp"

namespace spp::schur {

using exactalg::LaurentPoly;

enum class WeylForm { determinant, product };

// Type B_n Weyl denominator in x1..xn, either as det(x_i^(j-1) - x_i^(2n-j))
// or as prod_i (1 - x_i) * prod_{i<j} (x_i - x_j)(x_i x_j - 1). The two are
// equal; computing both is the point. Throws std::invalid_argument for n < 1.
LaurentPoly weyl_denominator(int n, WeylForm form);

// D_n(x1..xn) = det(x_j^(i-1) - x_j^(2n-i)), the transposed layout of the
// determinant form above.
LaurentPoly dn_polynomial(int n);

struct DnCheck {
  std::string label;
  bool pass = false;
};

// Symbolic checks on D_n as a polynomial in x1: it vanishes at x1 = 1,
// x1 = x_j and x1 = 1/x_j for j = 2..n, has degree exactly 2n - 1 in x1, and
// its x1^(2n-1) coefficient is -x2...xn * D_{n-1}(x2, ..., xn).
struct DnReport {
  int n = 0;
  std::vector<DnCheck> checks;
  LaurentPoly leading_coefficient;
  LaurentPoly expected_leading_coefficient;

  bool pass() const;
};

// Throws std::invalid_argument for n < 2.
DnReport dn_checks(int n);

}  // namespace spp::schur
