#include "spp/identity/permutation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace spp::identity {

int count_inversions(std::span<const int> images) {
  int inv = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) inv += images[i] > images[j] ? 1 : 0;
  }
  return inv;
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("permutation images must be a rearrangement of 1..n");
    seen[v] = true;
  }
  inversions_ = count_inversions(images_);
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

SignedSubset::SignedSubset(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  if (n < 0 || n > 31) throw std::invalid_argument("subset universe must be 0..31");
  if ((mask & ~full_mask(n)) != 0) throw std::invalid_argument("subset mask has members outside 1..n");
}

int SignedSubset::size() const { return std::popcount(mask_); }

std::vector<int> SignedSubset::members() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<SignedSubset> all_subsets(int n) {
  if (n < 0 || n > 31) throw std::invalid_argument("subset universe must be 0..31");
  std::vector<SignedSubset> out;
  for (std::uint32_t mask = 0; mask <= SignedSubset::full_mask(n); ++mask) out.emplace_back(n, mask);
  return out;
}

}  // namespace spp::identity
