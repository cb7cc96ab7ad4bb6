#include "spp/combinat/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace spp::combinat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw MalformedInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw MalformedInput("partition parts must weakly decrease");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i) {
    if (other.part(i) > part(i)) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> cols(empty() ? 0 : parts_[0], 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

int Partition::durfee_size() const {
  int r = 0;
  while (r < length() && parts_[r] >= r + 1) ++r;
  return r;
}

std::vector<int> Partition::principal_hooks() const {
  const Partition conj = conjugate();
  std::vector<int> hooks;
  for (int i = 1; i <= durfee_size(); ++i) hooks.push_back(part(i) - i + conj.part(i) - i + 1);
  return hooks;
}

Partition Partition::self_conjugate_from_hooks(std::span<const int> hooks) {
  const int r = static_cast<int>(hooks.size());
  for (int i = 0; i < r; ++i) {
    if (hooks[i] <= 0 || hooks[i] % 2 == 0) throw MalformedInput("principal hooks must be positive and odd");
    if (i > 0 && hooks[i] >= hooks[i - 1]) throw MalformedInput("principal hooks must strictly decrease");
  }
  // Diagonal cell i has arm = leg = (hooks[i-1] - 1) / 2, so row i ends at
  // column i + arm; rows below the Durfee square are the conjugate of the
  // top r rows restricted to the first r columns.
  std::vector<int> rows;
  for (int i = 1; i <= r; ++i) rows.push_back(i + (hooks[i - 1] - 1) / 2);
  for (int i = r + 1; !rows.empty() && i <= rows[0]; ++i) {
    int len = 0;
    for (int j = 1; j <= r; ++j) len += rows[j - 1] >= i ? 1 : 0;
    if (len == 0) break;
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

std::vector<Partition> partitions_in_box(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("partitions_in_box: negative box side");
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int)> extend = [&](int cap) {
    out.emplace_back(parts);
    if (static_cast<int>(parts.size()) == n) return;
    for (int p = 1; p <= cap; ++p) {
      parts.push_back(p);
      extend(p);
      parts.pop_back();
    }
  };
  extend(m);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
  });
  return out;
}

}  // namespace spp::combinat
