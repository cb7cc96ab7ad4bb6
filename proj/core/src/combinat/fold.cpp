#include "spp/combinat/fold.hpp"

#include <algorithm>

namespace spp::combinat {

ColumnStrictPP fold(const PlanePartition& sp) {
  if (auto v = sp.violation()) throw MalformedInput("fold: not a plane partition: " + *v);
  if (!sp.is_symmetric()) throw NotSymmetric("fold: plane partition is not symmetric");
  std::map<ColumnStrictPP::Cell, int> cells;
  for (int level = 1; level <= sp.max_height(); ++level) {
    const auto hooks = sp.slice(level).principal_hooks();
    for (std::size_t x = 0; x < hooks.size(); ++x) cells[{static_cast<int>(x + 1), level}] = hooks[x];
  }
  return ColumnStrictPP(std::move(cells));
}

PlanePartition unfold(const ColumnStrictPP& cs, std::optional<int> side) {
  if (auto v = cs.violation()) throw MalformedInput("unfold: " + *v);
  int largest = 0;
  for (const auto& [cell, h] : cs.cells()) largest = std::max(largest, h);
  const int n = side.value_or((largest + 1) / 2);
  if (n < 0 || (largest > 0 && largest > 2 * n - 1)) {
    throw MalformedInput("unfold: column height " + std::to_string(largest) + " does not fit a base of side " +
                         std::to_string(n));
  }

  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int level = 1; level <= cs.depth(); ++level) {
    const auto hooks = cs.level(level);
    const Partition slice = Partition::self_conjugate_from_hooks(hooks);
    for (int i = 1; i <= slice.length(); ++i) {
      for (int j = 1; j <= slice.part(i); ++j) rows[i - 1][j - 1] = level;
    }
  }
  return PlanePartition::from_rows(rows);
}

}  // namespace spp::combinat
