#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

namespace spp::combinat {

// Input that violates a combinatorial type invariant.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  // Throws MalformedInput unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  // 1-based; parts past the end read as 0.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  // At most n parts, each at most m.
  bool fits_in_box(int m, int n) const { return length() <= n && (empty() || parts_[0] <= m); }
  bool contains(const Partition& other) const;

  Partition conjugate() const;
  bool is_self_conjugate() const { return *this == conjugate(); }
  // Side of the largest square fitting in the diagram.
  int durfee_size() const;
  // Hook lengths of the diagonal cells (i, i), top to bottom.
  std::vector<int> principal_hooks() const;
  // The self-conjugate partition with the given principal hooks. Throws
  // MalformedInput unless hooks are positive, odd and strictly decreasing.
  static Partition self_conjugate_from_hooks(std::span<const int> hooks);

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions with at most n parts, each at most m: binomial(m+n, n) of
// them. Ordered by size, then lexicographically decreasing within a size.
std::vector<Partition> partitions_in_box(int m, int n);

}  // namespace spp::combinat
