#include "spp/exactalg/division.hpp"

#include <stdexcept>

#include "spp/exactalg/errors.hpp"

namespace spp::exactalg {

namespace {

Monomial content(const LaurentPoly& p) {
  Monomial c = p.terms().begin()->first;
  for (const auto& [m, coeff] : p.terms()) c = Monomial::min_exponents(c, m);
  return c;
}

[[noreturn]] void not_divisible(const LaurentPoly& num, const LaurentPoly& den) {
  throw NotDivisible("(" + to_string(num) + ") is not divisible by (" + to_string(den) + ")");
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_div: division by the zero polynomial");
  if (num.is_zero()) return {};

  const Monomial num_content = content(num);
  const Monomial den_content = content(den);
  LaurentPoly rem = num;
  rem.mul_term(num_content.inverse());
  LaurentPoly divisor = den;
  divisor.mul_term(den_content.inverse());

  const auto& [lead_mono, lead_coeff] = divisor.leading_term();
  LaurentPoly quotient;
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.leading_term();
    Monomial step = m / lead_mono;
    if (!step.is_polynomial()) not_divisible(num, den);
    Integer step_coeff;
    Integer r;
    boost::multiprecision::divide_qr(c, lead_coeff, step_coeff, r);
    if (r != 0) not_divisible(num, den);
    quotient.add_term(step, step_coeff);
    rem -= LaurentPoly(divisor).mul_term(step, step_coeff);
  }
  quotient.mul_term(num_content / den_content);
  return quotient;
}

}  // namespace spp::exactalg
