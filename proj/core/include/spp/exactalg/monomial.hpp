#pragma once

#include <initializer_list>
#include <span>
#include <utility>

#include <boost/container/small_vector.hpp>

#include "spp/exactalg/var.hpp"

namespace spp::exactalg {

// A Laurent monomial: a product of variables raised to nonzero integer
// exponents. Entries are kept sorted by variable and never carry a zero
// exponent, so equal monomials have identical representations.
class Monomial {
 public:
  using Entry = std::pair<Var, int>;

  Monomial() = default;
  // Duplicated variables are combined; zero exponents are dropped.
  Monomial(std::initializer_list<Entry> entries);

  static Monomial of(Var v, int exponent = 1);

  std::span<const Entry> entries() const { return {entries_.data(), entries_.size()}; }
  bool is_one() const { return entries_.empty(); }
  int exponent(Var v) const;
  // Sum of all exponents; may be negative.
  int degree() const;
  // True when no exponent is negative.
  bool is_polynomial() const;

  Monomial inverse() const;
  Monomial pow(int k) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Componentwise minimum of the exponent vectors, absent variables counting
  // as exponent 0. Dividing every term of a polynomial by the fold of this over
  // its terms leaves a polynomial with no variable factored out.
  static Monomial min_exponents(const Monomial& a, const Monomial& b);

 private:
  boost::container::small_vector<Entry, 6> entries_;
};

// The fixed total order used for canonical printing and for long division.
// Graded first: lower total degree sorts first. Within a degree the first
// variable (in q, x1, x2, ..., t1, ... order) whose exponents differ decides,
// and the larger exponent sorts first. This is compatible with multiplication
// and, restricted to ordinary monomials, a well-order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace spp::exactalg
