#include <doctest.h>

#include <random>

#include "oracle/oracle.hpp"
#include "oracle/random_poly.hpp"
#include "spp/exactalg/determinant.hpp"
#include "spp/exactalg/division.hpp"
#include "spp/exactalg/errors.hpp"
#include "spp/exactalg/laurent_poly.hpp"
#include "spp/exactalg/substitute.hpp"

using namespace spp::exactalg;

namespace {

LaurentPoly x(int i, int e = 1) { return LaurentPoly::var(Var::x(i), e); }
LaurentPoly q(int e = 1) { return LaurentPoly::var(Var::q(), e); }
LaurentPoly P(const char* text) { return parse_poly(text); }

}  // namespace

TEST_CASE("variables round-trip through their names") {
  CHECK(Var::from_name("q") == Var::q());
  CHECK(Var::from_name("x7") == Var::x(7));
  CHECK(Var::from_name("t12") == Var::t(12));
  CHECK(Var::x(3).name() == "x3");
  CHECK(Var::t(2).kind() == Var::Kind::t);
  CHECK_FALSE(Var::from_name("y1"));
  CHECK_FALSE(Var::from_name("x0"));
  CHECK_FALSE(Var::from_name("x01"));
  CHECK_FALSE(Var::from_name("x"));
  CHECK_THROWS_AS(Var::x(0), std::out_of_range);
  CHECK(Var::q() < Var::x(1));
  CHECK(Var::x(255) < Var::t(1));
}

TEST_CASE("monomials are canonical") {
  Monomial a{{Var::x(2), 1}, {Var::x(1), 2}, {Var::x(2), -1}};
  CHECK(a == Monomial::of(Var::x(1), 2));
  CHECK(a.exponent(Var::x(2)) == 0);
  CHECK((Monomial::of(Var::x(1)) * Monomial::of(Var::x(1), -1)).is_one());
  CHECK(Monomial{{Var::x(1), 2}, {Var::q(), -1}}.degree() == 1);
}

TEST_CASE("poly_arith examples") {
  CHECK(poly_arith(1 + x(1), 1 - x(1), ArithOp::mul) == 1 - x(1, 2));
  const LaurentPoly p = P("3*x1^2 - x2^-1 + q");
  CHECK(poly_arith(p, LaurentPoly(), ArithOp::add) == p);
  CHECK(poly_arith(p, p, ArithOp::sub).is_zero());
  CHECK(poly_arith(LaurentPoly::term(Monomial{{Var::x(1), 1}, {Var::x(2), -1}}), x(2), ArithOp::mul) == x(1));
}

TEST_CASE("canonical text format") {
  CHECK(to_string(1 - q(2)) == "1 - q^2");
  CHECK(to_string(LaurentPoly()) == "0");
  CHECK(to_string(x(2) - x(1)) == "-x1 + x2");
  CHECK(to_string(x(1, 2) * x(2) + x(1) * x(2, 2)) == "x1^2*x2 + x1*x2^2");
  CHECK(to_string(LaurentPoly(-7)) == "-7");
  CHECK(to_string(3 * q(2) * x(1) * x(2, -1) * LaurentPoly::var(Var::t(1))) == "3*q^2*x1*x2^-1*t1");
  CHECK(to_string(1 + x(1) + x(2) + x(1) * x(2)) == "1 + x1 + x2 + x1*x2");

  SUBCASE("parse accepts loose spacing and scattered coefficients") {
    CHECK(P(" - x1 +x2 ") == x(2) - x(1));
    CHECK(P("2*x1*3*x1^-2") == 6 * x(1, -1));
    CHECK(P("x1^+2") == x(1, 2));
    CHECK(P("0") == LaurentPoly());
  }
  SUBCASE("parse rejects malformed text") {
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x1 x2"), ParseError);
    CHECK_THROWS_AS(P("y^2"), ParseError);
    CHECK_THROWS_AS(P("x1^"), ParseError);
    CHECK_THROWS_AS(P("3*"), ParseError);
  }
  SUBCASE("print then parse is the identity on random polynomials") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      auto p = oracle::random_poly(rng);
      CHECK(P(to_string(p).c_str()) == p);
    }
  }
}

TEST_CASE("substitute examples") {
  const Var x1 = Var::x(1);
  const Var x2 = Var::x(2);
  CHECK(substitute(x(1) * x(2), {{x1, Monomial::of(Var::q(), 3)}, {x2, Monomial::of(Var::q())}}) == q(4));
  CHECK(substitute(x(1) + x(1, -1), {{x1, Monomial::of(Var::q())}}) == q() + q(-1));
  const int m = 2;
  CHECK(substitute(1 - x(1, m + 1), {{x1, Monomial::of(Var::q())}}) == 1 - q(3));
  // Simultaneous: swapping two variables.
  CHECK(substitute(x(1) - x(2, 2), {{x1, Monomial::of(x2)}, {x2, Monomial::of(x1)}}) == x(2) - x(1, 2));
  CHECK(substitute(x(1) + x(3), {{x1, Monomial{}}}) == 1 + x(3));
}

TEST_CASE("set_to_zero and coefficient_of") {
  CHECK(set_to_zero(1 + x(1) * x(2) + x(2), Var::x(1)) == 1 + x(2));
  CHECK_THROWS_AS(set_to_zero(x(1, -1), Var::x(1)), std::domain_error);
  const LaurentPoly p = P("x1^3*x2 - 2*x1^3 + x1*x2 + 5");
  CHECK(coefficient_of(p, Var::x(1), 3) == x(2) - 2);
  CHECK(coefficient_of(p, Var::x(1), 0) == LaurentPoly(5));
  CHECK(coefficient_of(p, Var::x(1), 2).is_zero());
}

TEST_CASE("exact_div examples") {
  CHECK(exact_div(1 - q(2), 1 - q()) == 1 + q());

  SUBCASE("two-variable quotient checked by re-multiplying") {
    const LaurentPoly num = x(1, 3) * x(2) - x(1) * x(2, 3);
    const LaurentPoly den = x(1) - x(2);
    const LaurentPoly quotient = exact_div(num, den);
    CHECK(quotient * den == num);
    CHECK(quotient == x(1, 2) * x(2) + x(1) * x(2, 2));
  }
  SUBCASE("nonzero remainder") {
    CHECK_THROWS_AS(exact_div(1 + q() - q(3), 1 - q()), NotDivisible);
    CHECK_THROWS_AS(exact_div(LaurentPoly(1), LaurentPoly(2)), NotDivisible);
  }
  SUBCASE("zero divisor") { CHECK_THROWS_AS(exact_div(q(), LaurentPoly()), std::invalid_argument); }
  SUBCASE("Laurent operands") {
    // (x1^-2 - 1) / (x1^-1 - 1) = x1^-1 + 1
    CHECK(exact_div(x(1, -2) - 1, x(1, -1) - 1) == x(1, -1) + 1);
    CHECK(exact_div(x(1), x(1, 3)) == x(1, -2));
    CHECK(exact_div(LaurentPoly(), 1 - q()).is_zero());
  }
}

TEST_CASE("determinant examples") {
  auto a = PolyMatrix::generate(1, [](int, int) { return parse_poly("x1 - 3*q"); });
  CHECK(determinant(a) == parse_poly("x1 - 3*q"));

  auto vandermonde = PolyMatrix::generate(2, [](int i, int j) { return j == 1 ? LaurentPoly(1) : x(i); });
  CHECK(determinant(vandermonde) == x(2) - x(1));

  CHECK_THROWS_AS(determinant(PolyMatrix(9)), OrderTooLarge);
  CHECK_THROWS_AS(determinant(PolyMatrix(4), 3), OrderTooLarge);
  CHECK_THROWS_AS(PolyMatrix(0), std::invalid_argument);

  // Permutation expansion against Gaussian elimination at a rational point.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = oracle::random_matrix(rng, 4, {.variables = 3, .max_terms = 4});
    auto point = oracle::sample_point(rng, 2);
    std::map<Var, oracle::Rational> at{{Var::q(), point[0]}, {Var::x(1), point[1]}, {Var::x(2), point[0] + 1}};
    auto numeric = oracle::matrix(4, [&](int i, int j) { return oracle::evaluate(m(i, j), at); });
    CHECK(oracle::evaluate(determinant(m), at) == oracle::gauss_det(numeric));
  }
}

TEST_CASE("swapping two rows negates a 3x3 determinant") {
  std::mt19937 rng(7);
  auto m = oracle::random_matrix(rng, 3, {.variables = 4, .max_terms = 5});
  auto swapped = m;
  swapped.swap_rows(1, 3);
  CHECK(determinant(swapped) == -determinant(m));
}

// --- ring and infrastructure properties over random small inputs -----------

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_poly(rng);
    const auto b = oracle::random_poly(rng);
    const auto c = oracle::random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly(1) == a);
    const auto product = a * b;
    for (const auto& [mono, coeff] : product.terms()) CHECK(coeff != 0);
  }
}

TEST_CASE("exact_div round-trips products") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_poly(rng, {.max_terms = 10});
    const auto b = oracle::random_nonzero_poly(rng, {.max_terms = 10});
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("determinant is alternating and row-linear") {
  std::mt19937 rng(31337);
  const oracle::PolyShape small{.variables = 4, .max_terms = 4, .max_abs_exponent = 2};
  for (int trial = 0; trial < 200; ++trial) {
    auto m = oracle::random_matrix(rng, 3, small);
    const auto det = determinant(m);
    auto swapped = m;
    swapped.swap_rows(1 + trial % 3, 1 + (trial + 1) % 3);
    CHECK(determinant(swapped) == -det);

    // Linear in row r: replacing it by (c * row + other) gives c * det + det'.
    const std::size_t r = 1 + trial % 3;
    const auto scale = oracle::random_poly(rng, small);
    auto other = m;
    auto combined = m;
    for (std::size_t j = 1; j <= 3; ++j) {
      other(r, j) = oracle::random_poly(rng, small);
      combined(r, j) = scale * m(r, j) + other(r, j);
    }
    CHECK(determinant(combined) == scale * det + determinant(other));
  }
}

TEST_CASE("substitute is a ring homomorphism") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_poly(rng, {.max_terms = 8});
    const auto b = oracle::random_poly(rng, {.max_terms = 8});
    Substitution s;
    std::uniform_int_distribution<int> e(-3, 3);
    s[Var::x(1)] = Monomial::of(Var::q(), e(rng));
    s[Var::x(2)] = Monomial::of(Var::x(3), e(rng));
    s[Var::q()] = Monomial{};
    CHECK(substitute(a * b, s) == substitute(a, s) * substitute(b, s));
    CHECK(substitute(a + b, s) == substitute(a, s) + substitute(b, s));
  }
}

TEST_CASE("coefficients grow past 64 bits without loss") {
  const LaurentPoly big = (1 + x(1)).pow(80);
  // binomial(80, 40) = 107507208733336176461620
  CHECK(big.coefficient(Monomial::of(Var::x(1), 40)).str() == "107507208733336176461620");
  CHECK(exact_div(big, (1 + x(1)).pow(79)) == 1 + x(1));
}
