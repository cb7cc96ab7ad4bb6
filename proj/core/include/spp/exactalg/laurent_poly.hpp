#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "spp/exactalg/monomial.hpp"

namespace spp::exactalg {

using Integer = boost::multiprecision::cpp_int;

// Sparse multivariate Laurent polynomial with arbitrary-precision integer
// coefficients. No zero coefficient is ever stored, so two polynomials are
// equal exactly when their term maps are equal.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer, MonomialOrder>;

  LaurentPoly() = default;
  LaurentPoly(std::int64_t c);  // NOLINT(google-explicit-constructor): constants read naturally

  static LaurentPoly constant(Integer c);
  static LaurentPoly term(Monomial m, Integer c = 1);
  static LaurentPoly var(Var v, int exponent = 1) { return term(Monomial::of(v, exponent)); }

  // Terms in ascending monomial order.
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;
  // Greatest term under MonomialOrder. Precondition: nonzero.
  const TermMap::value_type& leading_term() const { return *terms_.rbegin(); }

  // Smallest and largest exponent of v over all terms (0 for absent terms).
  // Precondition: nonzero.
  int min_exponent(Var v) const;
  int max_exponent(Var v) const;

  // Accumulates c*m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  // Multiplies every term by c*m.
  LaurentPoly& mul_term(const Monomial& m, const Integer& c = 1);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned k) const;

  // Sum of all coefficients, i.e. the value with every variable set to 1.
  Integer coefficient_sum() const;

 private:
  TermMap terms_;
};

enum class ArithOp { add, sub, mul };

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);

// Canonical text: terms in ascending MonomialOrder, e.g. "1 - q^2" or
// "-x1 + 3*q^2*x2^-1*t1". Unit coefficients and exponents are omitted.
std::string to_string(const LaurentPoly& p);
std::string to_string(const Monomial& m);
// Inverse of to_string; also accepts any whitespace, repeated factors and
// coefficients in any position of a product. Throws ParseError.
LaurentPoly parse_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace spp::exactalg
