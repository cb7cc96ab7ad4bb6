#include "spp/cli/run_verification.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <thread>

#include "spp/cli/checks.hpp"

namespace spp::cli {

std::vector<CheckTask> plan_tasks(const RunConfig& config) {
  std::vector<CheckTask> tasks;
  for (const auto& id : config.checks) {
    for (int n = std::max(config.n.lo, check_min_n(id)); n <= config.n.hi; ++n) {
      if (!check_uses_m(id)) {
        tasks.push_back({id, std::nullopt, n});
        continue;
      }
      for (int m = config.m.lo; m <= config.m.hi; ++m) tasks.push_back({id, m, n});
    }
  }
  return tasks;
}

bool VerificationRun::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

VerificationRun run_verification(const RunConfig& config,
                                 const std::function<void(const identity::CheckResult&)>& on_result) {
  config.validate();
  const auto tasks = plan_tasks(config);
  VerificationRun run;
  run.results.resize(tasks.size());

  std::atomic<std::size_t> next{0};
  std::mutex report_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto result = run_check(tasks[i].id, tasks[i].m, tasks[i].n);
      if (on_result) {
        std::lock_guard lock(report_mutex);
        on_result(result);
      }
      run.results[i] = std::move(result);
    }
  };

  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(config.parallel), tasks.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return run;
}

std::string format_text_line(const identity::CheckResult& r) {
  char buf[160];
  const std::string m = r.m ? std::to_string(*r.m) : "-";
  std::snprintf(buf, sizeof buf, "%-12s m=%-3s n=%-3d %-4s %10.2f ms", r.identity.c_str(), m.c_str(), r.n,
                r.pass ? "PASS" : "FAIL", r.elapsed.count());
  std::string line = buf;
  if (!r.pass && !r.detail.empty()) line += "  (" + r.detail + ")";
  return line;
}

}  // namespace spp::cli
