#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "spp/cli/run_config.hpp"
#include "spp/exactalg/laurent_poly.hpp"

namespace spp::cli {

enum class ObjectKind { symmetric_pp, column_strict, partitions };

// "symmetric-pp", "column-strict" or "partitions"; throws std::invalid_argument.
ObjectKind parse_object_kind(std::string_view name);

struct EnumerateSummary {
  std::int64_t count = 0;
  exactalg::LaurentPoly generating_function;
};

// Writes every object of the family (symmetric-pp: base n x n, heights <= m;
// column-strict: heights <= 2n-1, y <= m; partitions: m x n box) and then its
// q-generating function by weight.
//
// text: one compact JSON object per line, then "gf: <canonical polynomial>".
// json: {"kind", "n", "m", "count", "objects": [...], "generating_function"}.
//
// Throws InvalidRange for negative bounds.
EnumerateSummary enumerate_objects(ObjectKind kind, int n, int m, OutputFormat format, std::ostream& out);

}  // namespace spp::cli
