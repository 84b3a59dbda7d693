#ifndef HOPFORCE_BOUNDS_HPP
#define HOPFORCE_BOUNDS_HPP

#include <cstdint>
#include <optional>

#include "hopforce/solvers.hpp"

namespace hopforce {

/// ceil(2*sqrt(n-kappa) + kappa - 1), exact integer arithmetic.
int lower_bound_kappa(int n, int kappa);

/// ceil(n - alpha + 2*sqrt(alpha) - 1), exact integer arithmetic.
int upper_bound_alpha(int n, int alpha);

/// Known closed-form values per family; a field stays empty when no
/// formula applies to that parameter.
struct FamilyValues {
  std::optional<int> H, Z;
  std::optional<int> th_H, th_Z;
  std::optional<PtValue> th_star;
};

FamilyValues family_formula(const std::string& family, const std::vector<int>& params);

/// Snaking witness for paths (one leaf out of the box) and cycles (two
/// vertices out of the box): base is a prefix block, every round sweeps the
/// frontier forward. Achieves ceil(2*sqrt(n-1)) resp. ceil(2*sqrt(n-2)+1).
ThrottleCertificate build_snaking_witness(const std::string& family, int n);

/// U plus the empty-graph-optimal prefix of V; achieves ceil(2*sqrt(t)+s-1).
ThrottleCertificate build_bipartite_witness(int s, int t);

struct BoundReport {
  std::string graph6;
  int n = 0, kappa = 0, alpha = 0, delta = 0;
  int lower_kappa = 0, upper_alpha = 0;
  std::optional<int> exact;
  bool tight_lower = false, tight_upper = false;

  static std::string csv_header();
  std::string csv_row() const;
};

/// Computes both bounds; applies the kappa+alpha=n shortcut (then the exact
/// value needs no search); checks lower <= exact <= upper and throws
/// std::logic_error on a violation, which signals a solver bug.
BoundReport verify_bounds(const Graph& g, std::optional<int> exact_th = std::nullopt);

// ---- the spider strict-gap instance (restricted search, up to 64 vertices) ----

/// Adjacency masks for trees handled by the restricted search; vertex count
/// may exceed the 32-vertex Graph cap.
using TreeAdj = std::vector<std::uint64_t>;

TreeAdj spider_tree(int a, int b, int c);  // center 0, legs consecutive
TreeAdj path_tree(int n);

struct RestrictedSearchResult {
  bool achievable = false;
  std::uint64_t bases_checked = 0;
  std::uint64_t bases_admissible = 0;
  std::uint64_t states_explored = 0;
};

/// Searches for a base of size k that colors everything in `rounds` rounds
/// forcing exactly k-1 vertices per round with exactly one dormant unforced
/// vertex at every time. Requires k + rounds*(k-1) == n, i.e. the counting
/// argument leaves no slack; throws otherwise.
RestrictedSearchResult one_dormant_search(const TreeAdj& adj, int k, int rounds,
                                          int jobs = 1);

struct SpiderVerdict {
  int m = 0, n = 0;
  int lower = 0;       // 6m, the kappa bound
  int base_size = 0;   // 3m+1, forced by the counting argument
  bool achievable = false;  // false certifies th_H > 6m
  std::vector<int> feasible_sizes;
  RestrictedSearchResult search;
};

/// Verifies th_H(S(3m^2-1, 3m^2, 3m^2+1)) > 6m by the proof's restricted
/// search; only |B| = 3m+1 survives the counting argument. m = 2 (n = 37)
/// is the practical instance; larger m exceed the 64-vertex engine.
SpiderVerdict spider_strict_gap(int m, int jobs = 1);

}  // namespace hopforce

#endif
