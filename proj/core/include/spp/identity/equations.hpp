#pragma once

#include <cstddef>

#include "spp/exactalg/determinant.hpp"
#include "spp/exactalg/substitute.hpp"
#include "spp/identity/lemma.hpp"
#include "spp/schur/schur.hpp"

// Restatements of the box theorem used by its inductive proof, each built as
// two explicit polynomials so the claimed equality can be checked exactly.
// All of them expand n x n determinants or n! permutation sums and refuse
// n above `max_order` with exactalg::OrderTooLarge.
namespace spp::identity {

using schur::BoxParams;

inline constexpr std::size_t kMaxOrder = exactalg::kDefaultMaxDeterminantOrder;

// LHS = det(x_i^(j-1) - x_i^(m+2n-j))
// RHS = sum_lambda det(x_i^(lambda_j+n-j)) * prod_i (1 - x_i) * prod_{i<j} (x_i x_j - 1)
// with lambda over the m x n box.
Sides eq4_sides(BoxParams p, std::size_t max_order = kMaxOrder);

// Both determinants of eq4 written out as signed permutation sums:
// LHS = sum_{sigma, S} (-1)^(inv(sigma)+|S|) prod_{i in S} x_i^(m+2n-sigma(i))
//                                            prod_{i not in S} x_i^(sigma(i)-1)
// RHS = sum_{lambda, sigma} (-1)^inv(sigma) prod_i x_i^(lambda_sigma(i)+n-sigma(i))
//       * prod_i (1 - x_i) * prod_{i<j} (x_i x_j - 1)
Sides eq5_sides(BoxParams p, std::size_t max_order = kMaxOrder);

// The form reached after writing x_i^(m+1) = t_i x_i^(2-2n), in the ring over
// x1..xn, t1..tn:
// LHS = sum_{sigma, S} (-1)^(inv(sigma)+|S|) prod_{i in S} t_i x_i^(1-sigma(i))
//                                            prod_{i not in S} x_i^(sigma(i)-1)
// RHS = sum_k (-1)^(n+k) (1 - x_k) prod_{i!=k} (x_i x_k - 1)
//         sum_{sigma', S} (-1)^(inv(sigma')+|S|) prod_{i in S} t_i x_i^(-sigma'(i))
//                         prod_{i in Sbar} x_i^(sigma'(i))
//         * (1 - prod_{i in T} t_i x_i^(2-2n)) / (1 - prod_{i in T} x_i)
// where sigma' runs over bijections {1..n}\{k} -> {1..n-1}, S over subsets of
// {1..n}\{k}, Sbar is the complement of S in {1..n}\{k}, and T is the
// complement of S in {1..n}, so k is in T.
//
// The fraction is not a polynomial by itself. Terms are grouped by T; the
// sum over k of each group is divisible by (1 - prod_T x_i) and is divided
// exactly (NotDivisible otherwise) before the t-factor is applied, so the
// right side is assembled without leaving the Laurent ring.
Sides eq6_sides(int n, std::size_t max_order = kMaxOrder);

// t_i := x_i^(m+2n-1), which undoes the t-substitution for a box of height m.
exactalg::Substitution eq6_t_substitution(BoxParams p);

// eq6 at a concrete height m: both sides with t_i := x_i^(m+2n-1) applied
// termwise and the fraction expanded as the finite geometric sum
// sum_{r=0..m} (prod_T x_i)^r it abbreviates. No division is involved, so
// this is an independent route to the same polynomials as
// substitute(eq6_sides(n), eq6_t_substitution(p)).
Sides eq6_sides_at_height(BoxParams p, std::size_t max_order = kMaxOrder);

// det(x_i^(j+1-2n) - x_i^(1-j)); column n is identically zero.
LaurentPoly vanishing_det(int n, std::size_t max_order = kMaxOrder);

}  // namespace spp::identity
