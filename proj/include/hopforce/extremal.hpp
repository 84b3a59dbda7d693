#ifndef HOPFORCE_EXTREMAL_HPP
#define HOPFORCE_EXTREMAL_HPP

#include <string>
#include <vector>

#include "hopforce/graph.hpp"

namespace hopforce {

/// Every graph with th_H <= t, generated from K_a x empty(b+1) over all
/// a+b = t by deleting complete-edge subsets and identifying empty pairs
/// (realized as per-row column-interval merges). Canonical graph6 strings,
/// sorted by (n, string). Full enumeration supported for t <= 4.
std::vector<std::string> generate_th_le(int t);

/// Graphs with th_H exactly t: generate_th_le(t) minus generate_th_le(t-1).
std::vector<std::string> atlas_th_exact(int t);

/// Two layer-size conventions are plausible; the known G_0 triple decides.
/// PartSizePlusOne reproduces G_0 = {2K_2, K_2 u empty(2), empty(4)}.
enum class KangarooSizing { PartSize, PartSizePlusOne };

/// The sizing convention validated against the G_0 anchor (cached).
KangarooSizing resolved_kangaroo_sizing();

std::vector<std::string> generate_kangaroos_with_sizing(const std::vector<int>& parts,
                                                        KangarooSizing sizing);

/// All (k_1,...,k_r)-kangaroos up to isomorphism under the resolved sizing;
/// every output is re-verified by structure recovery.
std::vector<std::string> generate_kangaroos(const std::vector<int>& parts);

/// Structure recovery: does g admit a layered S_i/T_i assignment satisfying
/// the kangaroo properties for these parts?
bool is_kangaroo(const Graph& g, const std::vector<int>& parts);
bool is_kangaroo_with_sizing(const Graph& g, const std::vector<int>& parts,
                             KangarooSizing sizing);

/// Checks a concrete layer assignment against properties 1-5 (sizes,
/// disjointness, coverage, forbidden S_i-T_j edges, domination).
bool kangaroo_structure_valid(const Graph& g, const std::vector<int>& parts,
                              const std::vector<VertexSet>& S,
                              const std::vector<VertexSet>& T,
                              KangarooSizing sizing);

/// Minimal forbidden family: union of kangaroo families over compositions of
/// k+1, isomorphism-deduplicated, then members containing another member as
/// an induced subgraph removed. Supported for k <= 1.
std::vector<std::string> generate_Gk(int k);

/// th_H(g) >= n-k  iff  no member of G_k occurs as an induced subgraph.
bool classify_extreme_ge(const Graph& g, int k);

/// th_H(g) == n-k  iff  G_k-free but not G_{k-1}-free (k >= 1; k = 0 needs
/// only G_0-freeness).
bool classify_extreme_eq(const Graph& g, int k);

}  // namespace hopforce

#endif
