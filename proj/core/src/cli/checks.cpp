#include "spp/cli/checks.hpp"

#include <chrono>
#include <exception>
#include <string>

#include "spp/cli/run_config.hpp"
#include "spp/combinat/enumerate.hpp"
#include "spp/combinat/fold.hpp"
#include "spp/identity/equations.hpp"
#include "spp/identity/lemma.hpp"
#include "spp/schur/products.hpp"
#include "spp/schur/schur.hpp"
#include "spp/schur/weyl.hpp"

namespace spp::cli {

using exactalg::LaurentPoly;
using exactalg::Monomial;
using exactalg::Var;
using identity::CheckResult;
using schur::BoxParams;

namespace {

void set_sides(CheckResult& r, LaurentPoly lhs, LaurentPoly rhs) {
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.pass = r.lhs == r.rhs;
}

// Fails the result, keeping the first reason.
void require(CheckResult& r, bool ok, const std::string& what) {
  if (ok) return;
  r.pass = false;
  if (r.detail.empty()) r.detail = what;
}

void check_schur_agree(CheckResult& r, BoxParams p) {
  LaurentPoly via_tableaux;
  LaurentPoly via_bialternant;
  for (const auto& lambda : combinat::partitions_in_box(p.m, p.n)) {
    auto a = schur::schur_via_tableaux(lambda, p.n);
    auto b = schur::schur_via_bialternant(lambda, p.n);
    if (a != b && r.detail.empty()) r.detail = "backends disagree on a partition of size " + std::to_string(lambda.size());
    via_tableaux += a;
    via_bialternant += b;
  }
  const std::string detail = r.detail;
  set_sides(r, std::move(via_tableaux), std::move(via_bialternant));
  require(r, detail.empty(), detail);
}

void check_dn(CheckResult& r, int n) {
  auto report = schur::dn_checks(n);
  set_sides(r, report.leading_coefficient, report.expected_leading_coefficient);
  for (const auto& c : report.checks) require(r, c.pass, "failed: " + c.label);
}

void check_lemma(CheckResult& r, int n) {
  auto sides = identity::lemma_sides(n);
  set_sides(r, std::move(sides.lhs), std::move(sides.rhs));
  Monomial all;
  for (int i = 1; i <= n; ++i) all = all * Monomial::of(Var::x(i));
  require(r, identity::f_function(n) == LaurentPoly(1) - LaurentPoly::term(all), "F != 1 - x1...xn");
  auto boundary = identity::f_boundary_checks(n);
  require(r, boundary.at_zero, "F(0, ...) != 1");
  require(r, boundary.at_one, "F(1, x2, ...) != F(x2, ...)");
}

void check_macmahon(CheckResult& r, BoxParams p) {
  auto brute = combinat::generating_function_of<combinat::PlanePartition>(
      [&](const auto& visit) { combinat::symmetric_plane_partitions(p.n, p.m, visit); });
  auto specialised =
      schur::principal_specialization(schur::schur_box_sum(p), schur::macmahon_exponents(p.n));
  set_sides(r, std::move(brute), schur::macmahon_product(p));
  require(r, specialised == r.rhs, "specialised Schur box sum differs from the product");
}

void check_bijection(CheckResult& r, BoxParams p) {
  const int n = p.n;
  const int m = p.m;
  LaurentPoly symmetric_gf;
  LaurentPoly column_strict_gf;
  combinat::symmetric_plane_partitions(n, m, [&](const combinat::PlanePartition& sp) {
    symmetric_gf.add_term(Monomial::of(Var::q(), static_cast<int>(sp.weight())), 1);
    auto cs = combinat::fold(sp);
    require(r, !cs.violation(n, m).has_value(), "fold image breaks column-strict invariants");
    require(r, cs.weight() == sp.weight(), "fold changes weight");
    require(r, combinat::unfold(cs, n) == sp, "unfold(fold(sp)) != sp");
  });
  combinat::column_strict_odd_pps(n, m, [&](const combinat::ColumnStrictPP& cs) {
    column_strict_gf.add_term(Monomial::of(Var::q(), static_cast<int>(cs.weight())), 1);
    auto sp = combinat::unfold(cs, n);
    require(r, !sp.violation() && sp.is_symmetric() && sp.is_bounded(m), "unfold image is not a bounded symmetric plane partition");
    require(r, sp.weight() == cs.weight(), "unfold changes weight");
    require(r, combinat::fold(sp) == cs, "fold(unfold(cs)) != cs");
  });
  const std::string detail = r.detail;
  set_sides(r, std::move(symmetric_gf), std::move(column_strict_gf));
  require(r, detail.empty(), detail);
}

void dispatch(CheckResult& r, std::string_view id, BoxParams p) {
  const int n = p.n;
  if (id == "theorem") {
    set_sides(r, schur::schur_box_sum(p), schur::box_det_ratio(p));
  } else if (id == "schur-agree") {
    check_schur_agree(r, p);
  } else if (id == "weyl") {
    set_sides(r, schur::weyl_denominator(n, schur::WeylForm::determinant),
              schur::weyl_denominator(n, schur::WeylForm::product));
  } else if (id == "dn") {
    check_dn(r, n);
  } else if (id == "lemma") {
    check_lemma(r, n);
  } else if (id == "eq4") {
    auto s = identity::eq4_sides(p);
    set_sides(r, std::move(s.lhs), std::move(s.rhs));
  } else if (id == "eq5") {
    auto s = identity::eq5_sides(p);
    set_sides(r, std::move(s.lhs), std::move(s.rhs));
  } else if (id == "eq6") {
    auto s = identity::eq6_sides(n);
    set_sides(r, std::move(s.lhs), std::move(s.rhs));
  } else if (id == "vanishing") {
    set_sides(r, identity::vanishing_det(n), LaurentPoly());
  } else if (id == "macmahon") {
    check_macmahon(r, p);
  } else if (id == "gordon") {
    set_sides(r, schur::principal_specialization(schur::schur_box_sum(p), schur::gordon_exponents(n)),
              schur::gordon_product(p));
  } else if (id == "bijection") {
    check_bijection(r, p);
  } else {
    throw UnknownCheck("unknown check \"" + std::string(id) + "\"");
  }
}

}  // namespace

CheckResult run_check(std::string_view id, std::optional<int> m, int n) {
  CheckResult r;
  r.identity = std::string(id);
  r.m = check_uses_m(id) ? m : std::nullopt;
  r.n = n;
  const auto start = std::chrono::steady_clock::now();
  try {
    dispatch(r, id, BoxParams{m.value_or(1), n});
  } catch (const UnknownCheck&) {
    throw;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace spp::cli
