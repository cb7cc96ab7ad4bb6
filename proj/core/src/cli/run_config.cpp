#include "spp/cli/run_config.hpp"

#include <algorithm>
#include <charconv>

namespace spp::cli {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidRange("invalid range \"" + std::string(whole) + "\"");
  }
  return v;
}

}  // namespace

IntRange IntRange::parse(std::string_view text) {
  IntRange r;
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text, text);
  } else {
    r.lo = parse_int(text.substr(0, dots), text);
    r.hi = parse_int(text.substr(dots + 2), text);
  }
  if (r.lo > r.hi) throw InvalidRange("empty range \"" + std::string(text) + "\"");
  return r;
}

std::string IntRange::str() const { return std::to_string(lo) + ".." + std::to_string(hi); }

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> ids = {"theorem", "schur-agree", "weyl", "dn",       "lemma",     "eq4",
                                               "eq5",     "eq6",         "vanishing", "macmahon", "gordon", "bijection"};
  return ids;
}

bool check_uses_m(std::string_view id) {
  return id == "theorem" || id == "schur-agree" || id == "eq4" || id == "eq5" || id == "macmahon" ||
         id == "gordon" || id == "bijection";
}

int check_min_n(std::string_view id) { return id == "dn" ? 2 : 1; }

void RunConfig::validate() const {
  if (checks.empty()) throw UnknownCheck("no checks requested");
  for (const auto& id : checks) {
    if (std::find(known_checks().begin(), known_checks().end(), id) == known_checks().end()) {
      throw UnknownCheck("unknown check \"" + id + "\"");
    }
  }
  if (m.lo > m.hi || m.lo < 0) throw InvalidRange("m range " + m.str() + " must be non-empty and non-negative");
  if (n.lo > n.hi || n.lo < 1) throw InvalidRange("n range " + n.str() + " must be non-empty and start at 1 or more");
  if (parallel < 1) throw InvalidRange("worker count must be at least 1");
}

std::vector<std::string> parse_check_list(std::string_view text) {
  std::vector<std::string> out;
  while (true) {
    auto comma = text.find(',');
    std::string item(text.substr(0, comma));
    if (item == "all") {
      out.insert(out.end(), known_checks().begin(), known_checks().end());
    } else if (!item.empty()) {
      out.push_back(std::move(item));
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace spp::cli
