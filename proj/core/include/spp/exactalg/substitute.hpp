#pragma once

#include <map>

#include "spp/exactalg/laurent_poly.hpp"

namespace spp::exactalg {

using Substitution = std::map<Var, Monomial>;

// Replaces every occurrence v^e of an assigned variable by target^e, all
// assignments applied simultaneously. Unassigned variables pass through.
// Negative exponents are fine: the result lives in the Laurent ring.
LaurentPoly substitute(const LaurentPoly& p, const Substitution& assignments);

// Evaluates at v = 0. Throws std::domain_error if v occurs with a negative
// exponent.
LaurentPoly set_to_zero(const LaurentPoly& p, Var v);

// The coefficient of v^exponent when p is viewed as a Laurent polynomial in v
// over the remaining variables.
LaurentPoly coefficient_of(const LaurentPoly& p, Var v, int exponent);

}  // namespace spp::exactalg
