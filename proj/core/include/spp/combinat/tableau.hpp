#pragma once

#include <vector>

#include "spp/combinat/partition.hpp"
#include "spp/exactalg/monomial.hpp"

namespace spp::combinat {

// A filling of a Young diagram, rows top to bottom.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  // Rows match the shape, entries lie in 1..n, rows weakly increase and
  // columns strictly increase.
  bool is_semistandard(int n) const;
  // Product of x_e over all entries e.
  exactalg::Monomial weight_monomial() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

}  // namespace spp::combinat
