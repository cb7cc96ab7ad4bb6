#include "spp/identity/lemma.hpp"

#include <stdexcept>
#include <string>

#include "spp/exactalg/division.hpp"
#include "spp/exactalg/substitute.hpp"

namespace spp::identity {

using exactalg::Monomial;
using exactalg::Var;

namespace {

LaurentPoly x(int i) { return LaurentPoly::var(Var::x(i)); }

Monomial product_of_x(int from, int to) {
  Monomial m;
  for (int i = from; i <= to; ++i) m = m * Monomial::of(Var::x(i));
  return m;
}

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("variable count must be at least 1, got " + std::to_string(n));
}

}  // namespace

LaurentPoly ascending_vandermonde(int n) {
  LaurentPoly v(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) v *= x(j) - x(i);
  }
  return v;
}

Sides lemma_sides(int n) {
  require_positive(n);
  LaurentPoly sum;
  for (int k = 1; k <= n; ++k) {
    LaurentPoly term = (LaurentPoly(1) - x(k)).mul_term(Monomial::of(Var::x(k), -1));
    for (int i = 1; i <= n; ++i) {
      if (i != k) term *= LaurentPoly(1) - x(i) * x(k);
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (i != k && j != k) term *= x(j) - x(i);
      }
    }
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const Monomial all = product_of_x(1, n);
  return {sum.mul_term(all), (LaurentPoly(1) - LaurentPoly::term(all)) * ascending_vandermonde(n)};
}

LaurentPoly f_function(int n) {
  require_positive(n);
  return exactalg::exact_div(lemma_sides(n).lhs, ascending_vandermonde(n));
}

FBoundary f_boundary_checks(int n) {
  require_positive(n);
  const LaurentPoly f = f_function(n);
  FBoundary out;
  out.at_zero = exactalg::set_to_zero(f, Var::x(1)) == LaurentPoly(1);

  // F of the remaining n - 1 variables, relabelled x1..x_{n-1} -> x2..xn.
  // With no variables left the empty product is 1, so F() = 0.
  LaurentPoly tail;
  if (n > 1) {
    exactalg::Substitution shift;
    for (int i = 1; i < n; ++i) shift[Var::x(i)] = Monomial::of(Var::x(i + 1));
    tail = exactalg::substitute(f_function(n - 1), shift);
  }
  out.at_one = exactalg::substitute(f, {{Var::x(1), Monomial{}}}) == tail;
  return out;
}

}  // namespace spp::identity
