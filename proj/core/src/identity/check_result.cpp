#include "spp/identity/check_result.hpp"

namespace spp::identity {

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j;
  j["identity"] = r.identity;
  j["m"] = r.m ? nlohmann::json(*r.m) : nlohmann::json(nullptr);
  j["n"] = r.n;
  j["pass"] = r.pass;
  j["elapsed_ms"] = r.elapsed.count();
  if (!r.pass) {
    j["lhs"] = exactalg::to_string(r.lhs);
    j["rhs"] = exactalg::to_string(r.rhs);
    if (!r.detail.empty()) j["detail"] = r.detail;
  }
  return j;
}

}  // namespace spp::identity
