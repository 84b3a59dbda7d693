#ifndef HOPFORCE_VERIFY_HPP
#define HOPFORCE_VERIFY_HPP

#include <string>
#include <vector>

#include "hopforce/forcing.hpp"

namespace hopforce {

struct CheckResult {
  std::string id;      // e.g. "1.forcing-table"
  bool pass = false;
  std::string detail;  // sub-check counts and first failures (deterministic)
  double seconds = 0.0;
};

struct SuiteOptions {
  std::string only;        // run only checks whose id contains this substring
  int jobs = 1;            // sharding for the spider search
  bool selftest_fail = false;  // adds a deliberately failing row (harness test)
};

/// Runs the acceptance table: every check re-derives an expected value with
/// the exact solvers and reports pass/fail. All tolerances are exact.
std::vector<CheckResult> run_paper_suite(const SuiteOptions& opts = {});

// ---- naive reference implementations (independent of the pruned solvers;
//      used by the oracle-equivalence check and by tests) ----

namespace naive {

/// Plain DFS reachability, no memoization, no pruning, no symmetry collapse.
bool is_forcing_set(const Graph& g, VertexSet base, Rule r);

int forcing_number(const Graph& g, Rule r);

/// Minimum rounds over all round decompositions by full recursion; -1 = inf.
int pt(const Graph& g, VertexSet base, Rule r);

/// Minimum of |B| + pt over every subset; -1 never occurs (B = V works).
int throttling(const Graph& g, Rule r);

}  // namespace naive

}  // namespace hopforce

#endif
