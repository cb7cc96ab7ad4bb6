#include "spp/exactalg/substitute.hpp"

#include <stdexcept>

namespace spp::exactalg {

LaurentPoly substitute(const LaurentPoly& p, const Substitution& assignments) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial image;
    for (const auto& [v, e] : m.entries()) {
      auto it = assignments.find(v);
      image = image * (it == assignments.end() ? Monomial::of(v, e) : it->second.pow(e));
    }
    out.add_term(image, c);
  }
  return out;
}

LaurentPoly set_to_zero(const LaurentPoly& p, Var v) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(v);
    if (e < 0) throw std::domain_error("cannot set " + v.name() + " to 0: negative exponent present");
    if (e == 0) out.add_term(m, c);
  }
  return out;
}

LaurentPoly coefficient_of(const LaurentPoly& p, Var v, int exponent) {
  LaurentPoly out;
  const Monomial strip = Monomial::of(v, -exponent);
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(v) == exponent) out.add_term(m * strip, c);
  }
  return out;
}

}  // namespace spp::exactalg
