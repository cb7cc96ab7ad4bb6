#include "spp/exactalg/determinant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "spp/exactalg/errors.hpp"

namespace spp::exactalg {

PolyMatrix::PolyMatrix(std::size_t order) : order_(order), entries_(order * order) {
  if (order == 0) throw std::invalid_argument("PolyMatrix order must be at least 1");
}

PolyMatrix PolyMatrix::generate(std::size_t order, const std::function<LaurentPoly(int, int)>& entry) {
  PolyMatrix m(order);
  for (std::size_t i = 1; i <= order; ++i) {
    for (std::size_t j = 1; j <= order; ++j) m(i, j) = entry(static_cast<int>(i), static_cast<int>(j));
  }
  return m;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t j = 1; j <= order_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

LaurentPoly determinant(const PolyMatrix& m, std::size_t max_order) {
  const std::size_t n = m.order();
  if (n > max_order) {
    throw OrderTooLarge("determinant of order " + std::to_string(n) + " exceeds bound " +
                        std::to_string(max_order));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  LaurentPoly det;
  do {
    bool vanishes = false;
    for (std::size_t i = 1; i <= n && !vanishes; ++i) vanishes = m(i, perm[i - 1]).is_zero();
    if (vanishes) continue;

    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    LaurentPoly product = m(1, perm[0]);
    for (std::size_t i = 2; i <= n; ++i) product *= m(i, perm[i - 1]);
    if (inversions % 2 == 0) {
      det += product;
    } else {
      det -= product;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace spp::exactalg
