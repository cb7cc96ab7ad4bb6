#include "spp/schur/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "spp/exactalg/determinant.hpp"
#include "spp/exactalg/substitute.hpp"

namespace spp::schur {

using exactalg::Monomial;
using exactalg::Var;

namespace {

LaurentPoly x_pow(int i, int e) { return LaurentPoly::var(Var::x(i), e); }

void require_order(int n, int min) {
  if (n < min) throw std::invalid_argument("order must be at least " + std::to_string(min));
}

}  // namespace

LaurentPoly weyl_denominator(int n, WeylForm form) {
  require_order(n, 1);
  if (form == WeylForm::determinant) {
    return exactalg::determinant(
        exactalg::PolyMatrix::generate(n, [n](int i, int j) { return x_pow(i, j - 1) - x_pow(i, 2 * n - j); }));
  }
  LaurentPoly p(1);
  for (int i = 1; i <= n; ++i) p *= LaurentPoly(1) - x_pow(i, 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      p *= x_pow(i, 1) - x_pow(j, 1);
      p *= LaurentPoly::term(Monomial{{Var::x(i), 1}, {Var::x(j), 1}}) - LaurentPoly(1);
    }
  }
  return p;
}

LaurentPoly dn_polynomial(int n) {
  require_order(n, 1);
  return exactalg::determinant(
      exactalg::PolyMatrix::generate(n, [n](int i, int j) { return x_pow(j, i - 1) - x_pow(j, 2 * n - i); }));
}

bool DnReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const DnCheck& c) { return c.pass; });
}

DnReport dn_checks(int n) {
  require_order(n, 2);
  const Var x1 = Var::x(1);
  const LaurentPoly d = dn_polynomial(n);
  DnReport report;
  report.n = n;

  auto vanishes_at = [&](const std::string& label, Monomial value) {
    report.checks.push_back({label, exactalg::substitute(d, {{x1, value}}).is_zero()});
  };
  vanishes_at("x1 := 1", Monomial{});
  for (int j = 2; j <= n; ++j) {
    vanishes_at("x1 := x" + std::to_string(j), Monomial::of(Var::x(j)));
    vanishes_at("x1 := x" + std::to_string(j) + "^-1", Monomial::of(Var::x(j), -1));
  }

  const int top = 2 * n - 1;
  report.checks.push_back({"degree in x1 is " + std::to_string(top),
                           d.min_exponent(x1) >= 0 && d.max_exponent(x1) == top});

  // D_{n-1}(x2..xn): build in x1..x_{n-1}, then shift x_i -> x_{i+1}.
  exactalg::Substitution shift;
  for (int i = 1; i < n; ++i) shift[Var::x(i)] = Monomial::of(Var::x(i + 1));
  Monomial tail_product;
  for (int i = 2; i <= n; ++i) tail_product = tail_product * Monomial::of(Var::x(i));
  report.leading_coefficient = exactalg::coefficient_of(d, x1, top);
  report.expected_leading_coefficient =
      -exactalg::substitute(dn_polynomial(n - 1), shift).mul_term(tail_product);
  report.checks.push_back({"leading coefficient recursion",
                           report.leading_coefficient == report.expected_leading_coefficient});
  return report;
}

}  // namespace spp::schur
