#pragma once

#include <optional>
#include <ranges>

#include "spp/combinat/plane_partition.hpp"
#include "spp/exactalg/laurent_poly.hpp"

namespace spp::combinat {

class NotSymmetric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weight-preserving bijection from symmetric plane partitions to column-strict
// plane partitions with odd column heights.
//
// The level-l horizontal slice of a symmetric plane partition is a
// self-conjugate diagram, determined by its strictly decreasing odd principal
// hooks d1 > d2 > .... Those hooks become the column heights at (1, l),
// (2, l), .... Nested slices give hooks that weakly decrease in l, and the
// hooks of a slice sum to its size, so weight is preserved.
//
// Throws NotSymmetric for a non-symmetric input and MalformedInput if the
// heights do not form a plane partition.
ColumnStrictPP fold(const PlanePartition& sp);

// Inverse of fold. The result has base side `side`, or the smallest side that
// fits every hook (2 * side - 1 >= largest height) when omitted. Throws
// MalformedInput if cs breaks its invariants or does not fit in `side`.
PlanePartition unfold(const ColumnStrictPP& cs, std::optional<int> side = std::nullopt);

// Sum of q^weight over the objects.
template <std::ranges::input_range R>
exactalg::LaurentPoly generating_function(R&& objects) {
  exactalg::LaurentPoly gf;
  for (const auto& obj : objects) {
    gf.add_term(exactalg::Monomial::of(exactalg::Var::q(), static_cast<int>(obj.weight())), 1);
  }
  return gf;
}

// Same, for a visitor-style generator such as symmetric_plane_partitions bound
// to its box: `generate(visitor)` must call visitor on each object.
template <class T, class Generator>
exactalg::LaurentPoly generating_function_of(Generator&& generate) {
  exactalg::LaurentPoly gf;
  generate([&gf](const T& obj) {
    gf.add_term(exactalg::Monomial::of(exactalg::Var::q(), static_cast<int>(obj.weight())), 1);
  });
  return gf;
}

}  // namespace spp::combinat
