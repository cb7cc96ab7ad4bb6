#include "spp/combinat/json.hpp"

#include <charconv>
#include <string>

namespace spp::combinat {

nlohmann::json to_json(const PlanePartition& pp) { return pp.rows(); }

nlohmann::json to_json(const ColumnStrictPP& cs) {
  auto j = nlohmann::json::object();
  for (const auto& [cell, h] : cs.cells()) j[std::to_string(cell.first) + "," + std::to_string(cell.second)] = h;
  return j;
}

nlohmann::json to_json(const Partition& p) { return std::vector<int>(p.parts().begin(), p.parts().end()); }

nlohmann::json to_json(const Tableau& t) { return t.rows; }

PlanePartition plane_partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw MalformedInput("plane partition JSON must be an array of rows");
  return PlanePartition::from_rows(j.get<std::vector<std::vector<int>>>());
}

ColumnStrictPP column_strict_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw MalformedInput("column-strict JSON must be an object keyed by \"x,y\"");
  std::map<ColumnStrictPP::Cell, int> cells;
  for (const auto& [key, value] : j.items()) {
    auto comma = key.find(',');
    int x = 0;
    int y = 0;
    bool ok = comma != std::string::npos;
    if (ok) {
      auto [px, ex] = std::from_chars(key.data(), key.data() + comma, x);
      auto [py, ey] = std::from_chars(key.data() + comma + 1, key.data() + key.size(), y);
      ok = ex == std::errc{} && ey == std::errc{} && px == key.data() + comma && py == key.data() + key.size();
    }
    if (!ok) throw MalformedInput("bad column key \"" + key + "\"");
    cells[{x, y}] = value.get<int>();
  }
  return ColumnStrictPP(std::move(cells));
}

}  // namespace spp::combinat
