#include "spp/identity/equations.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "spp/combinat/partition.hpp"
#include "spp/exactalg/division.hpp"
#include "spp/exactalg/errors.hpp"
#include "spp/identity/permutation.hpp"

namespace spp::identity {

using exactalg::Integer;
using exactalg::Monomial;
using exactalg::PolyMatrix;
using exactalg::Var;

namespace {

LaurentPoly x(int i) { return LaurentPoly::var(Var::x(i)); }
Monomial xm(int i, int e) { return Monomial::of(Var::x(i), e); }
Monomial tm(int i) { return Monomial::of(Var::t(i)); }

void check_order(int n, std::size_t max_order) {
  if (n < 0) throw std::invalid_argument("negative order");
  if (static_cast<std::size_t>(n) > max_order) {
    throw exactalg::OrderTooLarge("order " + std::to_string(n) + " exceeds bound " + std::to_string(max_order));
  }
}

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

// prod_i (1 - x_i) * prod_{i<j} (x_i x_j - 1): the Weyl denominator with its
// Vandermonde factor removed.
LaurentPoly weyl_tail(int n) {
  LaurentPoly p(1);
  for (int i = 1; i <= n; ++i) p *= LaurentPoly(1) - x(i);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) p *= x(i) * x(j) - LaurentPoly(1);
  }
  return p;
}

// Sum over sigma and S of (-1)^(inv+|S|) prod_{S} x_i^(high - sigma(i))
// prod_{not S} x_i^(sigma(i)-1), optionally with a t_i on each i in S.
LaurentPoly signed_subset_expansion(int n, int high, bool with_t) {
  LaurentPoly sum;
  for (const auto& sigma : all_permutations(n)) {
    for (const auto& s : all_subsets(n)) {
      Monomial m;
      for (int i = 1; i <= n; ++i) {
        if (s.contains(i)) {
          m = m * xm(i, high - sigma(i));
          if (with_t) m = m * tm(i);
        } else {
          m = m * xm(i, sigma(i) - 1);
        }
      }
      sum.add_term(m, sigma.sign() * parity_sign(s.size()));
    }
  }
  return sum;
}

// The summand of eq6's right side for fixed k and S, without the fraction:
// (-1)^(n+k) (1 - x_k) prod_{i!=k} (x_i x_k - 1) times the signed sum over
// bijections sigma': {1..n}\{k} -> {1..n-1}. Members i of S contribute
// `in_s(i, sigma'(i))`; members of Sbar contribute x_i^sigma'(i).
template <class InS>
LaurentPoly eq6_summand(int n, int k, const SignedSubset& s, const std::vector<Permutation>& small_perms,
                        InS&& in_s) {
  std::vector<int> domain;
  for (int i = 1; i <= n; ++i) {
    if (i != k) domain.push_back(i);
  }
  LaurentPoly inner;
  for (const auto& pi : small_perms) {
    // sigma'(domain[r]) = pi(r + 1): relabelling the domain in increasing order
    // preserves inversions.
    Monomial m;
    for (std::size_t r = 0; r < domain.size(); ++r) {
      const int i = domain[r];
      const int image = pi(static_cast<int>(r) + 1);
      m = m * (s.contains(i) ? in_s(i, image) : xm(i, image));
    }
    inner.add_term(m, pi.sign() * parity_sign(s.size()));
  }
  LaurentPoly prefactor = LaurentPoly(parity_sign(n + k)) * (LaurentPoly(1) - x(k));
  for (int i = 1; i <= n; ++i) {
    if (i != k) prefactor *= x(i) * x(k) - LaurentPoly(1);
  }
  return prefactor * inner;
}

// Subsets S of {1..n}\{k}, by increasing mask.
std::vector<SignedSubset> subsets_avoiding(int n, int k) {
  std::vector<SignedSubset> out;
  for (const auto& s : all_subsets(n)) {
    if (!s.contains(k)) out.push_back(s);
  }
  return out;
}

}  // namespace

Sides eq4_sides(BoxParams p, std::size_t max_order) {
  p.validate();
  check_order(p.n, max_order);
  const int n = p.n;
  if (n == 0) return {1, 1};
  LaurentPoly lhs = exactalg::determinant(schur::box_numerator_matrix(p), max_order);
  LaurentPoly alternants;
  for (const auto& lambda : combinat::partitions_in_box(p.m, n)) {
    alternants += exactalg::determinant(
        PolyMatrix::generate(n, [&](int i, int j) { return LaurentPoly::var(Var::x(i), lambda.part(j) + n - j); }),
        max_order);
  }
  return {std::move(lhs), alternants * weyl_tail(n)};
}

Sides eq5_sides(BoxParams p, std::size_t max_order) {
  p.validate();
  check_order(p.n, max_order);
  const int n = p.n;
  LaurentPoly lhs = signed_subset_expansion(n, p.m + 2 * n, false);
  LaurentPoly alternants;
  const auto perms = all_permutations(n);
  for (const auto& lambda : combinat::partitions_in_box(p.m, n)) {
    for (const auto& sigma : perms) {
      Monomial m;
      for (int i = 1; i <= n; ++i) m = m * xm(i, lambda.part(sigma(i)) + n - sigma(i));
      alternants.add_term(m, sigma.sign());
    }
  }
  return {std::move(lhs), alternants * weyl_tail(n)};
}

Sides eq6_sides(int n, std::size_t max_order) {
  if (n < 1) throw std::invalid_argument("eq6 needs at least one variable");
  check_order(n, max_order);
  LaurentPoly lhs = signed_subset_expansion(n, 1, true);

  const auto small_perms = all_permutations(n - 1);
  const std::uint32_t full = SignedSubset::full_mask(n);
  std::map<std::uint32_t, LaurentPoly> by_complement;
  for (int k = 1; k <= n; ++k) {
    for (const auto& s : subsets_avoiding(n, k)) {
      by_complement[full & ~s.mask()] +=
          eq6_summand(n, k, s, small_perms, [](int i, int image) { return tm(i) * xm(i, -image); });
    }
  }

  LaurentPoly rhs;
  for (const auto& [t_mask, numerator] : by_complement) {
    const SignedSubset complement(n, t_mask);
    Monomial x_product;
    Monomial t_closure;
    for (int i : complement.members()) {
      x_product = x_product * xm(i, 1);
      t_closure = t_closure * tm(i) * xm(i, 2 - 2 * n);
    }
    rhs += (LaurentPoly(1) - LaurentPoly::term(t_closure)) *
           exactalg::exact_div(numerator, LaurentPoly(1) - LaurentPoly::term(x_product));
  }
  return {std::move(lhs), std::move(rhs)};
}

exactalg::Substitution eq6_t_substitution(BoxParams p) {
  p.validate();
  exactalg::Substitution s;
  for (int i = 1; i <= p.n; ++i) s[Var::t(i)] = xm(i, p.m + 2 * p.n - 1);
  return s;
}

Sides eq6_sides_at_height(BoxParams p, std::size_t max_order) {
  p.validate();
  if (p.n < 1) throw std::invalid_argument("eq6 needs at least one variable");
  check_order(p.n, max_order);
  const int n = p.n;
  const int lifted = p.m + 2 * n - 1;
  LaurentPoly lhs = signed_subset_expansion(n, p.m + 2 * n, false);

  const auto small_perms = all_permutations(n - 1);
  LaurentPoly rhs;
  for (int k = 1; k <= n; ++k) {
    for (const auto& s : subsets_avoiding(n, k)) {
      Monomial x_product;
      for (int i = 1; i <= n; ++i) {
        if (!s.contains(i)) x_product = x_product * xm(i, 1);
      }
      LaurentPoly geometric;
      for (int r = 0; r <= p.m; ++r) geometric.add_term(x_product.pow(r), 1);
      rhs += eq6_summand(n, k, s, small_perms, [lifted](int i, int image) { return xm(i, lifted - image); }) *
             geometric;
    }
  }
  return {std::move(lhs), std::move(rhs)};
}

LaurentPoly vanishing_det(int n, std::size_t max_order) {
  if (n < 1) throw std::invalid_argument("vanishing_det needs order at least 1");
  check_order(n, max_order);
  return exactalg::determinant(
      PolyMatrix::generate(n,
                           [n](int i, int j) {
                             return LaurentPoly::var(Var::x(i), j + 1 - 2 * n) - LaurentPoly::var(Var::x(i), 1 - j);
                           }),
      max_order);
}

}  // namespace spp::identity
