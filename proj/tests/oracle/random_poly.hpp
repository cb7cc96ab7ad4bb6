#pragma once

// Seeded generators for property tests over small random polynomials.

#include <random>

#include "spp/exactalg/determinant.hpp"
#include "spp/exactalg/laurent_poly.hpp"

namespace oracle {

struct PolyShape {
  int variables = 5;  // drawn from x1..x(variables-1) plus q
  int max_terms = 20;
  int max_abs_exponent = 3;
  int max_abs_coefficient = 9;
  bool allow_negative_exponents = true;
};

inline spp::exactalg::Var random_var(std::mt19937& rng, int variables) {
  std::uniform_int_distribution<int> pick(0, variables - 1);
  int k = pick(rng);
  return k == 0 ? spp::exactalg::Var::q() : spp::exactalg::Var::x(k);
}

inline spp::exactalg::LaurentPoly random_poly(std::mt19937& rng, const PolyShape& shape = {}) {
  using spp::exactalg::Monomial;
  std::uniform_int_distribution<int> terms(0, shape.max_terms);
  std::uniform_int_distribution<int> exps(shape.allow_negative_exponents ? -shape.max_abs_exponent : 0,
                                          shape.max_abs_exponent);
  std::uniform_int_distribution<int> coeffs(-shape.max_abs_coefficient, shape.max_abs_coefficient);
  std::uniform_int_distribution<int> factors(0, 3);
  spp::exactalg::LaurentPoly p;
  for (int t = terms(rng); t > 0; --t) {
    Monomial m;
    for (int f = factors(rng); f > 0; --f) m = m * Monomial::of(random_var(rng, shape.variables), exps(rng));
    p.add_term(m, coeffs(rng));
  }
  return p;
}

inline spp::exactalg::LaurentPoly random_nonzero_poly(std::mt19937& rng, const PolyShape& shape = {}) {
  while (true) {
    auto p = random_poly(rng, shape);
    if (!p.is_zero()) return p;
  }
}

inline spp::exactalg::PolyMatrix random_matrix(std::mt19937& rng, std::size_t order, const PolyShape& shape) {
  spp::exactalg::PolyMatrix m(order);
  for (std::size_t i = 1; i <= order; ++i) {
    for (std::size_t j = 1; j <= order; ++j) m(i, j) = random_poly(rng, shape);
  }
  return m;
}

}  // namespace oracle
