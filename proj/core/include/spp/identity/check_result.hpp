#pragma once

#include <chrono>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "spp/exactalg/laurent_poly.hpp"

namespace spp::identity {

// Outcome of one identity check at concrete parameters.
struct CheckResult {
  std::string identity;
  std::optional<int> m;  // absent for checks that do not depend on m
  int n = 0;
  exactalg::LaurentPoly lhs;
  exactalg::LaurentPoly rhs;
  // lhs == rhs, and for composite checks every auxiliary condition held.
  bool pass = false;
  // Names the auxiliary condition that failed, if any.
  std::string detail;
  std::chrono::duration<double, std::milli> elapsed{0};
};

// {"identity", "m", "n", "pass", "elapsed_ms"}; "m" is null when absent.
// A failed check also carries "lhs", "rhs" in canonical text and "detail".
nlohmann::json to_json(const CheckResult& r);

}  // namespace spp::identity
