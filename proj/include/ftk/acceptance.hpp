#pragma once

// The twelve acceptance criteria. Each one runs an independent check and
// reports pass/fail with a short detail string; the runner times each
// criterion and fails it when it overruns its limit.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ftk {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 means unlimited
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Runs the criteria listed in ids (all of them when empty), calling
/// on_result as each finishes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& ids = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace ftk
