#pragma once

#include <nlohmann/json.hpp>

#include "spp/combinat/partition.hpp"
#include "spp/combinat/plane_partition.hpp"
#include "spp/combinat/tableau.hpp"

// JSON forms used by the `enumerate` command:
//   PlanePartition  [[2,1],[1,1]]          (height matrix, row i = x)
//   ColumnStrictPP  {"1,1": 3, "2,1": 1}   (keys "x,y", nonzero heights only)
//   Partition       [2,1]
//   Tableau         [[1,1],[2]]            (rows)
namespace spp::combinat {

nlohmann::json to_json(const PlanePartition& pp);
nlohmann::json to_json(const ColumnStrictPP& cs);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Tableau& t);

// Throw MalformedInput on shape errors (nlohmann type errors propagate).
PlanePartition plane_partition_from_json(const nlohmann::json& j);
ColumnStrictPP column_strict_from_json(const nlohmann::json& j);

}  // namespace spp::combinat
