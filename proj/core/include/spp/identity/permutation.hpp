#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace spp::identity {

// A bijection on {1..n} together with its inversion count.
class Permutation {
 public:
  static Permutation identity(int n);
  // images[i-1] is the image of i. Throws std::invalid_argument unless the
  // images are exactly 1..n in some order.
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  std::span<const int> images() const { return images_; }
  // Pairs i < j with sigma(i) > sigma(j).
  int inversions() const { return inversions_; }
  int sign() const { return inversions_ % 2 == 0 ? 1 : -1; }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

 private:
  std::vector<int> images_;
  int inversions_ = 0;
};

int count_inversions(std::span<const int> images);

// All n! permutations in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(int n);

// A subset S of {1..n} with the sign vector eps_i = -1 for i in S, +1 otherwise.
class SignedSubset {
 public:
  // Bit i-1 of mask marks membership of i. Throws std::invalid_argument when
  // the mask has bits at or above n, or n is outside 0..31.
  SignedSubset(int n, std::uint32_t mask);

  int universe() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1U; }
  int epsilon(int i) const { return contains(i) ? -1 : 1; }
  int size() const;
  std::vector<int> members() const;
  SignedSubset complement() const { return {n_, ~mask_ & full_mask(n_)}; }

  static std::uint32_t full_mask(int n) { return (1U << n) - 1U; }

 private:
  int n_;
  std::uint32_t mask_;
};

// All 2^n subsets by increasing mask.
std::vector<SignedSubset> all_subsets(int n);

}  // namespace spp::identity
