#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spp::cli {

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inclusive integer range, written "a..b" or just "a".
struct IntRange {
  int lo = 1;
  int hi = 1;

  // Throws InvalidRange for malformed text or lo > hi.
  static IntRange parse(std::string_view text);
  std::string str() const;
};

enum class OutputFormat { text, json };

// Identity checks the runner knows, in their canonical report order.
const std::vector<std::string>& known_checks();
// False for checks that run once per n regardless of m.
bool check_uses_m(std::string_view id);
// Smallest n the check is defined for.
int check_min_n(std::string_view id);

struct RunConfig {
  std::vector<std::string> checks;
  IntRange m{1, 3};
  IntRange n{1, 3};
  OutputFormat output = OutputFormat::text;
  int parallel = 1;

  // Throws UnknownCheck or InvalidRange.
  void validate() const;
};

// Splits "a,b,c"; "all" expands to known_checks().
std::vector<std::string> parse_check_list(std::string_view text);

}  // namespace spp::cli
