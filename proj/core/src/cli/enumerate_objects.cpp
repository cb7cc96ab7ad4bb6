#include "spp/cli/enumerate_objects.hpp"

#include <ostream>

#include <nlohmann/json.hpp>

#include "spp/combinat/enumerate.hpp"
#include "spp/combinat/json.hpp"

namespace spp::cli {

using exactalg::Monomial;
using exactalg::Var;

ObjectKind parse_object_kind(std::string_view name) {
  if (name == "symmetric-pp") return ObjectKind::symmetric_pp;
  if (name == "column-strict") return ObjectKind::column_strict;
  if (name == "partitions") return ObjectKind::partitions;
  throw std::invalid_argument("unknown object kind \"" + std::string(name) + "\"");
}

namespace {

const char* kind_name(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::symmetric_pp:
      return "symmetric-pp";
    case ObjectKind::column_strict:
      return "column-strict";
    case ObjectKind::partitions:
      return "partitions";
  }
  return "";
}

}  // namespace

EnumerateSummary enumerate_objects(ObjectKind kind, int n, int m, OutputFormat format, std::ostream& out) {
  if (n < 0 || m < 0) throw InvalidRange("enumerate bounds must be non-negative");
  EnumerateSummary summary;
  auto objects = nlohmann::json::array();
  auto emit = [&](const nlohmann::json& obj, std::int64_t weight) {
    ++summary.count;
    summary.generating_function.add_term(Monomial::of(Var::q(), static_cast<int>(weight)), 1);
    if (format == OutputFormat::text) {
      out << obj.dump() << '\n';
    } else {
      objects.push_back(obj);
    }
  };

  switch (kind) {
    case ObjectKind::symmetric_pp:
      combinat::symmetric_plane_partitions(n, m, [&](const combinat::PlanePartition& pp) {
        emit(combinat::to_json(pp), pp.weight());
      });
      break;
    case ObjectKind::column_strict:
      combinat::column_strict_odd_pps(n, m, [&](const combinat::ColumnStrictPP& cs) {
        emit(combinat::to_json(cs), cs.weight());
      });
      break;
    case ObjectKind::partitions:
      for (const auto& p : combinat::partitions_in_box(m, n)) emit(combinat::to_json(p), p.size());
      break;
  }

  const std::string gf = exactalg::to_string(summary.generating_function);
  if (format == OutputFormat::text) {
    out << "gf: " << gf << '\n';
  } else {
    nlohmann::json doc = {{"kind", kind_name(kind)}, {"n", n}, {"m", m}, {"count", summary.count}};
    doc["objects"] = std::move(objects);
    doc["generating_function"] = gf;
    out << doc.dump(2) << '\n';
  }
  return summary;
}

}  // namespace spp::cli
