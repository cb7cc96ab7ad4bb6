#pragma once

#include "spp/exactalg/laurent_poly.hpp"

namespace spp::exactalg {

// Returns q with num == q * den exactly, or throws NotDivisible. Throws
// std::invalid_argument when den is zero.
//
// Both operands are first divided by their monomial content (the
// componentwise minimum exponent over their terms), which turns them into
// ordinary polynomials with no variable factored out. In that situation an
// exact Laurent quotient is an ordinary polynomial, so multivariate long
// division under MonomialOrder finds it; the content ratio is multiplied back
// in at the end. Over the integers a leading coefficient that does not divide
// evenly is also reported as NotDivisible.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace spp::exactalg
