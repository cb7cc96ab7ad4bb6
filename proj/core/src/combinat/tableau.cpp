#include "spp/combinat/tableau.hpp"

namespace spp::combinat {

bool Tableau::is_semistandard(int n) const {
  if (static_cast<int>(rows.size()) != shape.length()) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (static_cast<int>(row.size()) != shape.part(static_cast<int>(r) + 1)) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n) return false;
      if (c > 0 && row[c] < row[c - 1]) return false;
      if (r > 0 && row[c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

exactalg::Monomial Tableau::weight_monomial() const {
  exactalg::Monomial m;
  for (const auto& row : rows) {
    for (int e : row) m = m * exactalg::Monomial::of(exactalg::Var::x(e));
  }
  return m;
}

}  // namespace spp::combinat
