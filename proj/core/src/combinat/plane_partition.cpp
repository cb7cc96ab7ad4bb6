#include "spp/combinat/plane_partition.hpp"

#include <algorithm>
#include <numeric>

namespace spp::combinat {

namespace {

std::string cell_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

PlanePartition PlanePartition::from_rows(const std::vector<std::vector<int>>& rows) {
  PlanePartition p(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw MalformedInput("plane partition height matrix must be square");
    std::copy(rows[i].begin(), rows[i].end(), p.heights_.begin() + static_cast<std::ptrdiff_t>(i * rows.size()));
  }
  return p;
}

std::int64_t PlanePartition::weight() const {
  return std::accumulate(heights_.begin(), heights_.end(), std::int64_t{0});
}

int PlanePartition::max_height() const {
  return heights_.empty() ? 0 : *std::max_element(heights_.begin(), heights_.end());
}

std::optional<std::string> PlanePartition::violation() const {
  for (int i = 1; i <= side_; ++i) {
    for (int j = 1; j <= side_; ++j) {
      int h = height(i, j);
      if (h < 0) return "negative height at " + cell_name(i, j);
      if (i > 1 && h > height(i - 1, j)) return "column increases at " + cell_name(i, j);
      if (j > 1 && h > height(i, j - 1)) return "row increases at " + cell_name(i, j);
    }
  }
  return std::nullopt;
}

bool PlanePartition::is_symmetric() const {
  for (int i = 1; i <= side_; ++i) {
    for (int j = i + 1; j <= side_; ++j) {
      if (height(i, j) != height(j, i)) return false;
    }
  }
  return true;
}

Partition PlanePartition::slice(int level) const {
  std::vector<int> rows;
  for (int i = 1; i <= side_; ++i) {
    int len = 0;
    while (len < side_ && height(i, len + 1) >= level) ++len;
    if (len == 0) break;
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

std::vector<std::vector<int>> PlanePartition::rows() const {
  std::vector<std::vector<int>> out(side_);
  for (int i = 1; i <= side_; ++i) {
    for (int j = 1; j <= side_; ++j) out[i - 1].push_back(height(i, j));
  }
  return out;
}

ColumnStrictPP::ColumnStrictPP(std::map<Cell, int> heights) {
  for (const auto& [cell, h] : heights) {
    if (cell.first < 1 || cell.second < 1) throw MalformedInput("column positions are 1-based");
    if (h < 0) throw MalformedInput("negative column height at " + cell_name(cell.first, cell.second));
    if (h > 0) heights_.emplace(cell, h);
  }
}

ColumnStrictPP ColumnStrictPP::from_levels(const std::vector<std::vector<int>>& levels) {
  std::map<Cell, int> cells;
  for (std::size_t y = 0; y < levels.size(); ++y) {
    for (std::size_t x = 0; x < levels[y].size(); ++x) {
      cells[{static_cast<int>(x + 1), static_cast<int>(y + 1)}] = levels[y][x];
    }
  }
  return ColumnStrictPP(std::move(cells));
}

int ColumnStrictPP::height(int x, int y) const {
  auto it = heights_.find({x, y});
  return it == heights_.end() ? 0 : it->second;
}

std::int64_t ColumnStrictPP::weight() const {
  std::int64_t w = 0;
  for (const auto& [cell, h] : heights_) w += h;
  return w;
}

int ColumnStrictPP::depth() const {
  int d = 0;
  for (const auto& [cell, h] : heights_) d = std::max(d, cell.second);
  return d;
}

std::vector<int> ColumnStrictPP::level(int y) const {
  std::vector<int> out;
  for (int x = 1;; ++x) {
    int h = height(x, y);
    if (h == 0) break;
    out.push_back(h);
  }
  return out;
}

std::optional<std::string> ColumnStrictPP::violation() const {
  for (const auto& [cell, h] : heights_) {
    const auto [x, y] = cell;
    if (h % 2 == 0) return "even column height at " + cell_name(x, y);
    if (x > 1) {
      int left = height(x - 1, y);
      if (left == 0) return "gap before nonempty column " + cell_name(x, y);
      if (left <= h) return "heights not strictly decreasing in x at " + cell_name(x, y);
    }
    if (y > 1 && height(x, y - 1) < h) return "heights increase in y at " + cell_name(x, y);
  }
  return std::nullopt;
}

std::optional<std::string> ColumnStrictPP::violation(int n, int m) const {
  if (auto v = violation()) return v;
  for (const auto& [cell, h] : heights_) {
    if (h > 2 * n - 1) return "column height exceeds 2n-1 at " + cell_name(cell.first, cell.second);
    if (cell.second > m) return "y exceeds bound at " + cell_name(cell.first, cell.second);
  }
  return std::nullopt;
}

}  // namespace spp::combinat
