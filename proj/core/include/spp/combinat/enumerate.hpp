#pragma once

#include <functional>
#include <vector>

#include "spp/combinat/partition.hpp"
#include "spp/combinat/plane_partition.hpp"
#include "spp/combinat/tableau.hpp"

// Exhaustive generators for the objects of the symmetric plane partition
// correspondence. Each generator pushes objects to a visitor one at a time,
// in a deterministic order, so callers never have to hold a whole family in
// memory. Degenerate boxes (a zero side or bound) yield only the empty object.
namespace spp::combinat {

template <class T>
using Visitor = std::function<void(const T&)>;

// Symmetric plane partitions with base inside n x n and heights at most m.
void symmetric_plane_partitions(int n, int m, const Visitor<PlanePartition>& visit);

// Column-strict plane partitions with y at most m whose nonempty columns have
// odd heights at most 2n - 1.
void column_strict_odd_pps(int n, int m, const Visitor<ColumnStrictPP>& visit);

// Semistandard tableaux of the given shape with entries in 1..n. Nothing is
// emitted when the shape has more than n rows.
void ssyt(const Partition& shape, int n, const Visitor<Tableau>& visit);

// Materialises a generator's output.
template <class T, class Generator>
std::vector<T> collect(Generator&& generate) {
  std::vector<T> out;
  generate([&out](const T& obj) { out.push_back(obj); });
  return out;
}

}  // namespace spp::combinat
