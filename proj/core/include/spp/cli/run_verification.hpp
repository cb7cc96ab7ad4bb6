#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spp/cli/run_config.hpp"
#include "spp/identity/check_result.hpp"

namespace spp::cli {

// One unit of work: a check at concrete parameters.
struct CheckTask {
  std::string id;
  std::optional<int> m;
  int n = 0;
};

// The (check, n, m) grid in report order: checks in config order, then n,
// then m. Checks that ignore m appear once per n; n below a check's minimum
// is skipped.
std::vector<CheckTask> plan_tasks(const RunConfig& config);

struct VerificationRun {
  std::vector<identity::CheckResult> results;  // in plan_tasks order
  bool all_pass() const;
  // 0 when every check passed, 1 otherwise.
  int exit_status() const { return all_pass() ? 0 : 1; }
};

// Validates the config (UnknownCheck / InvalidRange before any work), then
// runs the grid on `config.parallel` workers pulling tasks from a shared
// counter. `on_result`, if set, sees each result as it completes (serialised,
// completion order). The returned results are in plan order whatever the
// worker count.
VerificationRun run_verification(const RunConfig& config,
                                 const std::function<void(const identity::CheckResult&)>& on_result = {});

// One aligned line per result: identity, m, n, PASS/FAIL, milliseconds.
std::string format_text_line(const identity::CheckResult& r);

}  // namespace spp::cli
