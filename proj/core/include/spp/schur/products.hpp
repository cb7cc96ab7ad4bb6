#pragma once

#include <span>
#include <vector>

#include "spp/exactalg/laurent_poly.hpp"
#include "spp/schur/schur.hpp"

namespace spp::schur {

// Substitutes x_i := q^exponents[i-1] for i = 1..exponents.size().
LaurentPoly principal_specialization(const LaurentPoly& p, std::span<const int> exponents);

// 2n-1, 2n-3, ..., 1: the specialisation that turns the box Schur sum into
// the generating function of symmetric plane partitions.
std::vector<int> macmahon_exponents(int n);
// n, n-1, ..., 1.
std::vector<int> gordon_exponents(int n);

// prod_i (1 - q^(m+2i-1)) prod_{i<j} (1 - q^(2(m+i+j-1)))
//   / prod_i (1 - q^(2i-1)) prod_{i<j} (1 - q^(2(i+j-1))).
// Individual factors are not polynomial ratios, so numerator and denominator
// are multiplied out in full and divided once.
LaurentPoly macmahon_product(BoxParams p);

// prod_{1<=i<=j<=n} (1 - q^(m+i+j-1)) / (1 - q^(i+j-1)), divided the same way.
LaurentPoly gordon_product(BoxParams p);

}  // namespace spp::schur
