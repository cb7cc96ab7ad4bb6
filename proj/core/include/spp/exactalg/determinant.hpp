#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "spp/exactalg/laurent_poly.hpp"

namespace spp::exactalg {

// Square matrix of Laurent polynomials. Indices are 1-based, so entry (i, j)
// reads the same as in a displayed formula.
class PolyMatrix {
 public:
  // Throws std::invalid_argument for order 0.
  explicit PolyMatrix(std::size_t order);

  // Builds the matrix with entry (i, j) = entry(i, j), i and j in 1..order.
  static PolyMatrix generate(std::size_t order, const std::function<LaurentPoly(int, int)>& entry);

  std::size_t order() const { return order_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[(i - 1) * order_ + (j - 1)]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const {
    return entries_[(i - 1) * order_ + (j - 1)];
  }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t order_;
  std::vector<LaurentPoly> entries_;
};

inline constexpr std::size_t kDefaultMaxDeterminantOrder = 8;

// Sum over permutations s of (-1)^inv(s) * prod_i M(i, s(i)), permutations
// visited in lexicographic order. The n! expansion is refused above
// max_order with OrderTooLarge.
LaurentPoly determinant(const PolyMatrix& m, std::size_t max_order = kDefaultMaxDeterminantOrder);

}  // namespace spp::exactalg
