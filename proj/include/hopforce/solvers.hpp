#ifndef HOPFORCE_SOLVERS_HPP
#define HOPFORCE_SOLVERS_HPP

#include <optional>

#include "hopforce/forcing.hpp"

namespace hopforce {

/// Witness set, schedule, and the throttling sum th = |B| + pt. The schedule
/// re-validates in the forcing engine whenever pt is finite.
struct ThrottleCertificate {
  VertexSet base = 0;
  RoundSchedule schedule;
  int size = 0;
  PtValue pt = PtValue::inf();
  PtValue th = PtValue::inf();

  nlohmann::json to_json(Rule r) const;
};

/// Product throttling: value = k*(1+pt_k) with initial cost, k*pt_k without.
struct ProductCertificate {
  int k = 0;
  PtValue pt_k = PtValue::inf();
  PtValue value = PtValue::inf();
  bool initial_cost = true;
};

enum class ProductVariant { InitialCost, NoCost };

struct ForcingWitness {
  bool forcing = false;
  std::vector<Force> chronology;  // a valid chronological list when forcing
};

struct ForcingNumberResult {
  int value = 0;
  VertexSet witness = 0;  // lexicographically least minimum forcing set
  std::vector<Force> chronology;
};

struct PropagationResult {
  PtValue pt = PtValue::inf();
  RoundSchedule schedule;  // populated when pt is finite
};

/// True iff some chronological list from base colors V(G); memoized DFS over
/// (blue, extinct) states with symmetry-collapsed moves.
ForcingWitness is_forcing_set(const Graph& g, VertexSet base, Rule r,
                              const SearchLimits& limits = {});

/// Exact minimum forcing set size; subsets enumerated by increasing size and
/// lexicographic order (under H the sweep starts at delta+1).
ForcingNumberResult forcing_number(const Graph& g, Rule r,
                                   const SearchLimits& limits = {});

/// Exact minimum propagation time over all sets of forces of base; infinite
/// iff base is not a forcing set. Branches whose admissible bound exceeds
/// budget are pruned, so pass a finite budget to cap the search.
PropagationResult min_propagation_time(const Graph& g, VertexSet base, Rule r,
                                       PtValue budget = PtValue::inf(),
                                       const SearchLimits& limits = {});

/// Exact throttling number with certificate: branch-and-bound over base
/// sizes ascending, sets lexicographic, first optimal certificate wins.
ThrottleCertificate throttling_number(const Graph& g, Rule r,
                                      const SearchLimits& limits = {});

/// pt_X(G,k): minimum propagation time among size-k sets (inf if none).
PtValue pt_of_size(const Graph& g, int k, Rule r, const SearchLimits& limits = {});

/// Minimum size of a set whose propagation time is exactly p.
std::optional<int> k_of_pt(const Graph& g, int p, Rule r = Rule::H,
                           const SearchLimits& limits = {});

ProductCertificate product_throttling(const Graph& g, ProductVariant variant,
                                      Rule r = Rule::H,
                                      const SearchLimits& limits = {});

/// Re-executes a certificate in the forcing engine and checks its numbers.
bool certificate_valid(const Graph& g, const ThrottleCertificate& cert, Rule r);

/// Transposition-twin partition of the vertices: u,v share a class iff some
/// automorphism chain of twin swaps links them (equal open or closed
/// neighborhoods, transitively). Used to collapse symmetric search moves.
std::vector<int> twin_classes(const Graph& g);

}  // namespace hopforce

#endif
