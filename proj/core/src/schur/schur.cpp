#include "spp/schur/schur.hpp"

#include <stdexcept>
#include <string>

#include "spp/combinat/enumerate.hpp"
#include "spp/exactalg/division.hpp"
#include "spp/schur/weyl.hpp"

namespace spp::schur {

using exactalg::Monomial;
using exactalg::Var;

namespace {

LaurentPoly x_pow(int i, int e) { return LaurentPoly::var(Var::x(i), e); }

}  // namespace

void BoxParams::validate() const {
  if (m < 0 || n < 0) {
    throw std::invalid_argument("box parameters must be non-negative (m=" + std::to_string(m) +
                                ", n=" + std::to_string(n) + ")");
  }
}

LaurentPoly schur_via_tableaux(const combinat::Partition& shape, int n) {
  LaurentPoly s;
  combinat::ssyt(shape, n, [&s](const combinat::Tableau& t) { s.add_term(t.weight_monomial(), 1); });
  return s;
}

LaurentPoly vandermonde(int n) {
  LaurentPoly v(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) v *= x_pow(i, 1) - x_pow(j, 1);
  }
  return v;
}

LaurentPoly schur_via_bialternant(const combinat::Partition& shape, int n) {
  if (shape.length() > n) return {};
  if (n == 0) return 1;
  auto alternant = exactalg::PolyMatrix::generate(
      n, [&](int i, int j) { return x_pow(i, shape.part(j) + n - j); });
  return exactalg::exact_div(exactalg::determinant(alternant), vandermonde(n));
}

LaurentPoly schur_box_sum(BoxParams p, SchurBackend backend) {
  p.validate();
  LaurentPoly sum;
  for (const auto& lambda : combinat::partitions_in_box(p.m, p.n)) {
    sum += backend == SchurBackend::tableaux ? schur_via_tableaux(lambda, p.n)
                                             : schur_via_bialternant(lambda, p.n);
  }
  return sum;
}

exactalg::PolyMatrix box_numerator_matrix(BoxParams p) {
  p.validate();
  const int n = p.n;
  return exactalg::PolyMatrix::generate(
      n, [&](int i, int j) { return x_pow(i, j - 1) - x_pow(i, p.m + 2 * n - j); });
}

LaurentPoly box_det_ratio(BoxParams p) {
  p.validate();
  if (p.n == 0) return 1;
  return exactalg::exact_div(exactalg::determinant(box_numerator_matrix(p)),
                             weyl_denominator(p.n, WeylForm::determinant));
}

}  // namespace spp::schur
