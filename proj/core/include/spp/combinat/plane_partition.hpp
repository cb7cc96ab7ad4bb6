#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spp/combinat/partition.hpp"

namespace spp::combinat {

// A plane partition in an n x n base, stored as its height matrix: entry
// (i, j) is the number of lattice points stacked over (i, j). Indices are
// 1-based and row i is the x-coordinate.
//
// The type stores whatever matrix it is given; `violation()` reports the
// first broken invariant, so malformed data can be detected rather than
// rejected at construction.
class PlanePartition {
 public:
  PlanePartition() = default;
  explicit PlanePartition(int side) : side_(side), heights_(static_cast<std::size_t>(side) * side, 0) {}
  // Throws MalformedInput if the rows do not form a square matrix.
  static PlanePartition from_rows(const std::vector<std::vector<int>>& rows);

  int side() const { return side_; }
  int height(int i, int j) const { return heights_[index(i, j)]; }
  std::int64_t weight() const;
  int max_height() const;

  // Empty when the heights are non-negative and weakly decrease along every
  // row and column (the lattice-point set is down-closed).
  std::optional<std::string> violation() const;
  bool is_symmetric() const;
  bool is_bounded(int m) const { return max_height() <= m; }

  // The diagram of cells with height >= level.
  Partition slice(int level) const;

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;

 private:
  friend class PlanePartitionBuilder;

  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i - 1) * side_ + (j - 1); }

  int side_ = 0;
  std::vector<int> heights_;
};

// Column heights of a column-strict plane partition keyed by (x, y), both
// 1-based. Only nonzero heights are stored. As with PlanePartition, the
// invariants are checked by `violation()` rather than at construction.
class ColumnStrictPP {
 public:
  using Cell = std::pair<int, int>;

  ColumnStrictPP() = default;
  // Zero heights are dropped. Throws MalformedInput for negative heights or
  // non-positive coordinates.
  explicit ColumnStrictPP(std::map<Cell, int> heights);
  // levels[j - 1] lists the heights at y = j by increasing x.
  static ColumnStrictPP from_levels(const std::vector<std::vector<int>>& levels);

  const std::map<Cell, int>& cells() const { return heights_; }
  int height(int x, int y) const;
  std::int64_t weight() const;
  // Largest y with a nonempty column, 0 when empty.
  int depth() const;
  // Heights at y = level by increasing x, stopping at the first empty column.
  std::vector<int> level(int y) const;

  // Empty when: nonempty columns at each y occupy a prefix of x positions,
  // heights are odd, strictly decrease in x and weakly decrease in y.
  std::optional<std::string> violation() const;
  // As above, and additionally heights are at most 2n - 1 and y at most m.
  std::optional<std::string> violation(int n, int m) const;

  friend bool operator==(const ColumnStrictPP&, const ColumnStrictPP&) = default;

 private:
  std::map<Cell, int> heights_;
};

}  // namespace spp::combinat
