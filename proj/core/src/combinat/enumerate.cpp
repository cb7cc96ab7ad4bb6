#include "spp/combinat/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace spp::combinat {

// Mutates a PlanePartition in place while the generator walks the search
// tree; visitors only ever see it through a const reference.
class PlanePartitionBuilder {
 public:
  explicit PlanePartitionBuilder(int side) : pp_(side) {}

  void set_symmetric(int i, int j, int h) {
    pp_.heights_[pp_.index(i, j)] = h;
    pp_.heights_[pp_.index(j, i)] = h;
  }
  const PlanePartition& get() const { return pp_; }

 private:
  PlanePartition pp_;
};

namespace {

void check_bounds(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("box bounds must be non-negative");
}

// Fills the upper triangle (i <= j) row by row, mirroring each value, with
// each height capped by its upper and left neighbours.
void fill_symmetric(PlanePartitionBuilder& b, int n, int m, int i, int j, const Visitor<PlanePartition>& visit) {
  if (i > n) {
    visit(b.get());
    return;
  }
  const auto& pp = b.get();
  int cap = m;
  if (i > 1) cap = std::min(cap, pp.height(i - 1, j));
  if (j > 1) cap = std::min(cap, pp.height(i, j - 1));
  int ni = j == n ? i + 1 : i;
  int nj = j == n ? i + 1 : j + 1;
  for (int h = 0; h <= cap; ++h) {
    b.set_symmetric(i, j, h);
    fill_symmetric(b, n, m, ni, nj, visit);
  }
  b.set_symmetric(i, j, 0);
}

// Enumerates the strictly decreasing odd sequences s with s[k] <= caps[k],
// including the empty one, calling `each` on every sequence.
void odd_strict_sequences(const std::vector<int>& caps, std::vector<int>& seq,
                          const std::function<void(const std::vector<int>&)>& each) {
  each(seq);
  const std::size_t k = seq.size();
  if (k == caps.size()) return;
  int cap = caps[k];
  if (k > 0) cap = std::min(cap, seq.back() - 2);
  for (int h = 1; h <= cap; h += 2) {
    seq.push_back(h);
    odd_strict_sequences(caps, seq, each);
    seq.pop_back();
  }
}

void fill_levels(int m, std::vector<std::vector<int>>& levels, const Visitor<ColumnStrictPP>& visit) {
  if (static_cast<int>(levels.size()) == m || levels.back().empty()) {
    visit(ColumnStrictPP::from_levels(levels));
    return;
  }
  std::vector<int> seq;
  const std::vector<int> caps = levels.back();
  odd_strict_sequences(caps, seq, [&](const std::vector<int>& s) {
    levels.push_back(s);
    fill_levels(m, levels, visit);
    levels.pop_back();
  });
}

void fill_tableau(Tableau& t, const Partition& conj, int n, int r, int c, const Visitor<Tableau>& visit) {
  if (r == t.shape.length()) {
    visit(t);
    return;
  }
  const int row_len = t.shape.part(r + 1);
  int lo = r + 1;
  if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
  if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
  // Leave room for the strictly increasing entries below in this column.
  const int hi = n - (conj.part(c + 1) - 1 - r);
  const int nr = c + 1 == row_len ? r + 1 : r;
  const int nc = c + 1 == row_len ? 0 : c + 1;
  for (int v = lo; v <= hi; ++v) {
    t.rows[r][c] = v;
    fill_tableau(t, conj, n, nr, nc, visit);
  }
}

}  // namespace

void symmetric_plane_partitions(int n, int m, const Visitor<PlanePartition>& visit) {
  check_bounds(n, m);
  PlanePartitionBuilder b(n);
  fill_symmetric(b, n, m, 1, 1, visit);
}

void column_strict_odd_pps(int n, int m, const Visitor<ColumnStrictPP>& visit) {
  check_bounds(n, m);
  if (m == 0 || n == 0) {
    visit(ColumnStrictPP{});
    return;
  }
  std::vector<int> top_caps(n, 2 * n - 1);
  std::vector<std::vector<int>> levels;
  std::vector<int> seq;
  odd_strict_sequences(top_caps, seq, [&](const std::vector<int>& s) {
    levels.push_back(s);
    fill_levels(m, levels, visit);
    levels.pop_back();
  });
}

void ssyt(const Partition& shape, int n, const Visitor<Tableau>& visit) {
  if (shape.length() > n) return;
  Tableau t{shape, {}};
  for (int p : shape.parts()) t.rows.emplace_back(p, 0);
  fill_tableau(t, shape.conjugate(), n, 0, 0, visit);
}

}  // namespace spp::combinat
