// Acceptance runner: one pass/fail line per check, nonzero exit on any
// failure. The same table backs `hopforce verify --suite paper`.

#include <cstring>
#include <iostream>

#include "hopforce/verify.hpp"

int main(int argc, char** argv) {
  hopforce::SuiteOptions opts;
  opts.jobs = 2;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) opts.only = argv[++i];
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc)
      opts.jobs = std::atoi(argv[++i]);
  }
  std::vector<hopforce::CheckResult> results = hopforce::run_paper_suite(opts);
  int failures = 0;
  for (const auto& r : results) {
    std::cout << "[check " << r.id << "] " << (r.pass ? "PASS" : "FAIL")
              << "  " << r.detail << "\n";
    std::cerr << r.id << ": " << static_cast<int>(r.seconds * 1000) << " ms\n";
    if (!r.pass) ++failures;
  }
  std::cout << (failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << " ("
            << results.size() - failures << "/" << results.size() << ")\n";
  return failures ? 1 : 0;
}
