// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <cstdlib>
#include <iostream>
#include <string>

#include "ftk/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = ftk::kDefaultSeed;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else {
      ids.push_back(std::stoi(arg));
    }
  }
  int failed = 0;
  ftk::run_acceptance(seed, ids, [&](const ftk::CriterionResult& r) {
    std::cout << ftk::format_result(r) << std::endl;
    failed += !r.pass;
  });
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : std::string("acceptance: all criteria passed"))
            << std::endl;
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
