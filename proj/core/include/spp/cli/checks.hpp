#pragma once

#include <optional>
#include <string_view>

#include "spp/identity/check_result.hpp"

namespace spp::cli {

// Runs one named check. Exceptions raised by the underlying computation
// (NotDivisible, OrderTooLarge, ...) become a failing result whose detail
// carries the message. Throws UnknownCheck for an unrecognised id.
//
//   theorem      box Schur sum == determinant ratio
//   schur-agree  tableau and bialternant Schur polynomials agree on every
//                partition of the box (lhs/rhs: the two box sums)
//   weyl         Weyl denominator, determinant form == product form
//   dn           leading coefficient recursion of D_n; roots and degree are
//                auxiliary conditions
//   lemma        lemma sides; F == 1 - x1...xn and its boundary values are
//                auxiliary conditions
//   eq4 / eq5    restated theorem sides
//   eq6          t-form sides
//   vanishing    det(x_i^(j+1-2n) - x_i^(1-j)) == 0
//   macmahon     brute-force generating function of symmetric plane
//                partitions == MacMahon product; the specialised Schur box
//                sum must match both (auxiliary)
//   gordon       Schur box sum at (q^n, ..., q) == Gordon product
//   bijection    weight generating functions of symmetric and odd
//                column-strict plane partitions; fold/unfold being mutually
//                inverse over both families is auxiliary
identity::CheckResult run_check(std::string_view id, std::optional<int> m, int n);

}  // namespace spp::cli
