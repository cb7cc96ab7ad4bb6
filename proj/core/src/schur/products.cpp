#include "spp/schur/products.hpp"

#include "spp/exactalg/division.hpp"
#include "spp/exactalg/substitute.hpp"

namespace spp::schur {

using exactalg::Monomial;
using exactalg::Var;

namespace {

LaurentPoly one_minus_q(int e) { return LaurentPoly(1) - LaurentPoly::var(Var::q(), e); }

}  // namespace

LaurentPoly principal_specialization(const LaurentPoly& p, std::span<const int> exponents) {
  exactalg::Substitution s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    s[Var::x(static_cast<int>(i + 1))] = Monomial::of(Var::q(), exponents[i]);
  }
  return exactalg::substitute(p, s);
}

std::vector<int> macmahon_exponents(int n) {
  std::vector<int> e;
  for (int i = 1; i <= n; ++i) e.push_back(2 * (n - i) + 1);
  return e;
}

std::vector<int> gordon_exponents(int n) {
  std::vector<int> e;
  for (int i = n; i >= 1; --i) e.push_back(i);
  return e;
}

LaurentPoly macmahon_product(BoxParams p) {
  p.validate();
  const int m = p.m;
  LaurentPoly num(1);
  LaurentPoly den(1);
  for (int i = 1; i <= p.n; ++i) {
    num *= one_minus_q(m + 2 * i - 1);
    den *= one_minus_q(2 * i - 1);
    for (int j = i + 1; j <= p.n; ++j) {
      num *= one_minus_q(2 * (m + i + j - 1));
      den *= one_minus_q(2 * (i + j - 1));
    }
  }
  return exactalg::exact_div(num, den);
}

LaurentPoly gordon_product(BoxParams p) {
  p.validate();
  LaurentPoly num(1);
  LaurentPoly den(1);
  for (int i = 1; i <= p.n; ++i) {
    for (int j = i; j <= p.n; ++j) {
      num *= one_minus_q(p.m + i + j - 1);
      den *= one_minus_q(i + j - 1);
    }
  }
  return exactalg::exact_div(num, den);
}

}  // namespace spp::schur
