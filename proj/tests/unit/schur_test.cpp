#include <doctest.h>

#include <random>

#include "oracle/oracle.hpp"
#include "spp/combinat/enumerate.hpp"
#include "spp/combinat/fold.hpp"
#include "spp/exactalg/substitute.hpp"
#include "spp/schur/products.hpp"
#include "spp/schur/schur.hpp"
#include "spp/schur/weyl.hpp"

using namespace spp::schur;
using spp::combinat::Partition;
using spp::exactalg::Monomial;
using spp::exactalg::parse_poly;
using spp::exactalg::Var;
using oracle::Rational;

namespace {

LaurentPoly x(int i, int e = 1) { return LaurentPoly::var(Var::x(i), e); }

LaurentPoly q_series(const std::vector<int>& coefficients) {
  LaurentPoly p;
  for (std::size_t k = 0; k < coefficients.size(); ++k) p.add_term(Monomial::of(Var::q(), static_cast<int>(k)), coefficients[k]);
  return p;
}

LaurentPoly swap_vars(const LaurentPoly& p, int i, int j) {
  return spp::exactalg::substitute(p, {{Var::x(i), Monomial::of(Var::x(j))}, {Var::x(j), Monomial::of(Var::x(i))}});
}

LaurentPoly symmetric_gf(int n, int m) {
  return spp::combinat::generating_function_of<spp::combinat::PlanePartition>(
      [&](auto visit) { spp::combinat::symmetric_plane_partitions(n, m, visit); });
}

// Golden coefficient lists, confirmed against brute-force enumeration.
const std::vector<int> kMacMahon33 = {1, 1, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 7, 7,
                                      7, 7, 7, 6, 6, 5, 4, 4, 3, 2, 2, 1, 1, 1};
const std::vector<int> kMacMahon23 = {1, 1, 1, 1, 2, 2, 3, 2, 3, 3, 3, 2, 3, 2, 2, 1, 1, 1, 1};
const std::vector<int> kGordon44 = {1,   1,   2,   4,   7,   10,  16,  22,  31,  41,  54,  66,  83, 97,
                                    113, 128, 143, 152, 163, 167, 170, 167, 163, 152, 143, 128, 113, 97,
                                    83,  66,  54,  41,  31,  22,  16,  10,  7,   4,   2,   1,   1};

}  // namespace

TEST_CASE("schur_via_tableaux examples") {
  CHECK(schur_via_tableaux(Partition({1}), 2) == x(1) + x(2));
  CHECK(schur_via_tableaux(Partition({2, 1}), 2) == x(1, 2) * x(2) + x(1) * x(2, 2));
  CHECK(schur_via_tableaux(Partition({1, 1, 1}), 2).is_zero());
  CHECK(schur_via_tableaux(Partition(), 3) == LaurentPoly(1));
}

TEST_CASE("schur_via_bialternant examples") {
  CHECK(schur_via_bialternant(Partition({2, 1}), 2) == x(1, 2) * x(2) + x(1) * x(2, 2));
  for (int n = 1; n <= 4; ++n) CHECK(schur_via_bialternant(Partition(), n) == LaurentPoly(1));
  CHECK(schur_via_bialternant(Partition({1}), 2) == x(1) + x(2));
  CHECK(schur_via_bialternant(Partition({1, 1, 1}), 2).is_zero());
  CHECK(vandermonde(2) == x(1) - x(2));
  CHECK(vandermonde(1) == LaurentPoly(1));
}

TEST_CASE("schur_box_sum examples") {
  CHECK(schur_box_sum({1, 1}) == 1 + x(1));
  CHECK(schur_box_sum({1, 2}) == 1 + x(1) + x(2) + x(1) * x(2));
  CHECK(schur_box_sum({2, 1}) == 1 + x(1) + x(1, 2));
  CHECK(schur_box_sum({0, 3}) == LaurentPoly(1));
  CHECK(schur_box_sum({3, 0}) == LaurentPoly(1));
  CHECK_THROWS_AS(schur_box_sum({-1, 2}), std::invalid_argument);
}

TEST_CASE("box_det_ratio examples") {
  for (int m = 0; m <= 4; ++m) {
    LaurentPoly geometric;
    for (int k = 0; k <= m; ++k) geometric += x(1, k);
    CHECK(box_det_ratio({m, 1}) == geometric);
  }
  CHECK(box_det_ratio({1, 2}) == (1 + x(1)) * (1 + x(2)));
  CHECK(box_det_ratio({2, 0}) == LaurentPoly(1));
}

TEST_CASE("schur polynomials are symmetric") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& shape : spp::combinat::partitions_in_box(3, n)) {
      const auto s = schur_via_tableaux(shape, n);
      for (int i = 1; i < n; ++i) CHECK(swap_vars(s, i, i + 1) == s);
    }
  }
  const auto box = schur_box_sum({2, 3});
  CHECK(swap_vars(box, 1, 2) == box);
  CHECK(swap_vars(box, 2, 3) == box);
}

TEST_CASE("schur polynomials agree with numeric oracles at rational points") {
  std::mt19937 rng(17);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& shape : spp::combinat::partitions_in_box(3, n)) {
      const auto point = oracle::sample_point(rng, n);
      const auto at = oracle::x_assignment(point);
      std::vector<int> parts(shape.parts().begin(), shape.parts().end());
      const Rational brute = oracle::brute_schur_value(parts, point);
      CHECK(oracle::evaluate(schur_via_tableaux(shape, n), at) == brute);

      // Bialternant over exact rationals by Gaussian elimination.
      auto alt = oracle::matrix(n, [&](int i, int j) { return oracle::power(point[i - 1], shape.part(j) + n - j); });
      auto vdm = oracle::matrix(n, [&](int i, int j) { return oracle::power(point[i - 1], n - j); });
      CHECK(oracle::gauss_det(alt) / oracle::gauss_det(vdm) == brute);
    }
  }
}

TEST_CASE("box determinant ratio agrees with numeric determinants") {
  std::mt19937 rng(23);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const auto point = oracle::sample_point(rng, n);
      auto num = oracle::matrix(n, [&](int i, int j) {
        return oracle::power(point[i - 1], j - 1) - oracle::power(point[i - 1], m + 2 * n - j);
      });
      auto den = oracle::matrix(n, [&](int i, int j) {
        return oracle::power(point[i - 1], j - 1) - oracle::power(point[i - 1], 2 * n - j);
      });
      CHECK(oracle::evaluate(box_det_ratio({m, n}), oracle::x_assignment(point)) ==
            oracle::gauss_det(num) / oracle::gauss_det(den));
      CHECK(box_numerator_matrix({m, n})(1, 1) == 1 - x(1, m + 2 * n - 1));
    }
  }
}

TEST_CASE("weyl denominator") {
  CHECK(weyl_denominator(1, WeylForm::determinant) == 1 - x(1));
  CHECK(weyl_denominator(1, WeylForm::product) == 1 - x(1));
  const auto two = parse_poly("x1^3*x2^2 - x1^3*x2 - x1^2*x2^3 + x1^2 + x1*x2^3 - x1 - x2^2 + x2");
  CHECK(weyl_denominator(2, WeylForm::determinant) == two);
  CHECK(weyl_denominator(2, WeylForm::product) == (1 - x(1)) * (1 - x(2)) * (x(1) - x(2)) * (x(1) * x(2) - 1));
  for (int n = 1; n <= 4; ++n) {
    CHECK(weyl_denominator(n, WeylForm::determinant) == weyl_denominator(n, WeylForm::product));
  }
  CHECK_THROWS_AS(weyl_denominator(0, WeylForm::product), std::invalid_argument);

  std::mt19937 rng(3);
  const auto point = oracle::sample_point(rng, 3);
  auto numeric = oracle::matrix(3, [&](int i, int j) {
    return oracle::power(point[i - 1], j - 1) - oracle::power(point[i - 1], 6 - j);
  });
  CHECK(oracle::evaluate(weyl_denominator(3, WeylForm::product), oracle::x_assignment(point)) ==
        oracle::gauss_det(numeric));
}

TEST_CASE("D_n root and leading coefficient checks") {
  CHECK(dn_polynomial(1) == 1 - x(1));
  const auto d2 = dn_polynomial(2);
  CHECK(spp::exactalg::substitute(d2, {{Var::x(1), Monomial{}}}).is_zero());
  CHECK(spp::exactalg::coefficient_of(d2, Var::x(1), 3) == -x(2) * (1 - x(2)));
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const auto report = dn_checks(n);
    CHECK(report.n == n);
    for (const auto& c : report.checks) {
      CAPTURE(c.label);
      CHECK(c.pass);
    }
    CHECK(report.leading_coefficient == report.expected_leading_coefficient);
    CHECK(report.pass());
  }
  CHECK_THROWS_AS(dn_checks(1), std::invalid_argument);
}

TEST_CASE("principal specialization") {
  const std::vector<int> three_one{3, 1};
  CHECK(principal_specialization(x(1) + x(2), three_one) == parse_poly("q^3 + q"));
  CHECK(principal_specialization(schur_box_sum({1, 2}), three_one) == parse_poly("1 + q + q^3 + q^4"));
  CHECK(principal_specialization(LaurentPoly(1), three_one) == LaurentPoly(1));
  CHECK(macmahon_exponents(3) == std::vector<int>{5, 3, 1});
  CHECK(gordon_exponents(3) == std::vector<int>{3, 2, 1});
}

TEST_CASE("macmahon product") {
  CHECK(macmahon_product({1, 1}) == parse_poly("1 + q"));
  CHECK(macmahon_product({1, 2}) == parse_poly("1 + q + q^3 + q^4"));
  CHECK(macmahon_product({3, 3}) == q_series(kMacMahon33));
  CHECK(macmahon_product({3, 3}).coefficient_sum() == 112);
  CHECK(macmahon_product({2, 3}) == q_series(kMacMahon23));
  for (int m = 0; m <= 4; ++m) {
    LaurentPoly geometric;
    for (int k = 0; k <= m; ++k) geometric += LaurentPoly::var(Var::q(), k);
    CHECK(macmahon_product({m, 1}) == geometric);
  }
}

TEST_CASE("macmahon chain: enumeration, specialised schur sum, product") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const auto product = macmahon_product({m, n});
      CHECK(symmetric_gf(n, m) == product);
      CHECK(principal_specialization(schur_box_sum({m, n}), macmahon_exponents(n)) == product);
    }
  }
}

TEST_CASE("gordon product") {
  CHECK(gordon_product({1, 2}) == parse_poly("1 + q + q^2 + q^3"));
  CHECK(gordon_product({4, 4}) == q_series(kGordon44));
  for (int m = 0; m <= 4; ++m) {
    LaurentPoly geometric;
    for (int k = 0; k <= m; ++k) geometric += LaurentPoly::var(Var::q(), k);
    CHECK(gordon_product({m, 1}) == geometric);
  }
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      CHECK(principal_specialization(schur_box_sum({m, n}), gordon_exponents(n)) == gordon_product({m, n}));
    }
  }
}

TEST_CASE("backends agree on a small box") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& shape : spp::combinat::partitions_in_box(3, n)) {
      CHECK(schur_via_tableaux(shape, n) == schur_via_bialternant(shape, n));
    }
    CHECK(schur_box_sum({2, n}, SchurBackend::tableaux) == schur_box_sum({2, n}, SchurBackend::bialternant));
  }
}
