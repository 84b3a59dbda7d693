#ifndef HOPFORCE_FORCING_HPP
#define HOPFORCE_FORCING_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hopforce/graph.hpp"

namespace hopforce {

/// The three color change rules. Hopping (H): a blue vertex that has never
/// forced and whose whole neighborhood is blue may color any white vertex.
/// Standard (Z): a blue vertex with exactly one white neighbor colors it.
/// FloorZ: either rule applies; a vertex that has performed any force may
/// not hop again, while Z validity never consults the forcing history
/// (a vertex that forced has no white neighbors left anyway).
enum class Rule { H, Z, FloorZ };

std::string rule_name(Rule r);
Rule rule_from_name(const std::string& name);

enum class VertexStatus { White, Dormant, Active, Extinct };

/// Full state of a forcing process: who is blue, and which blue vertices
/// have already performed a force. extinct is a subset of blue.
struct ForcingState {
  VertexSet blue = 0;
  VertexSet extinct = 0;

  bool operator==(const ForcingState&) const = default;
  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(blue) << 32) | extinct;
  }
};

struct Force {
  int src;
  int dst;
  bool operator==(const Force&) const = default;
  auto operator<=>(const Force&) const = default;
};

/// An unordered set of forces together with its initial blue set. Invariants
/// (checked by validate_force_set): each vertex appears at most once as src
/// and at most once as dst, no dst lies in base, src != dst.
struct ForceSet {
  VertexSet base = 0;
  std::vector<Force> forces;
};

/// Greedy earliest round decomposition of a force set: round t holds every
/// force that first becomes valid once rounds 1..t-1 are blue. The blue set
/// after round i is blue_after(i), with blue_after(0) = base.
struct RoundSchedule {
  VertexSet base = 0;
  std::vector<std::vector<Force>> rounds;

  int pt() const { return static_cast<int>(rounds.size()); }
  VertexSet blue_after(int i) const;
  VertexSet colored_in_round(int i) const;  // F^(i), i >= 1
  std::vector<Force> flatten() const;
};

struct ChronologyError : std::runtime_error {
  int index;  // position of the first invalid force
  ChronologyError(const std::string& msg, int idx)
      : std::runtime_error(msg + " (force index " + std::to_string(idx) + ")"),
        index(idx) {}
};

// ---- rule semantics ----

bool force_valid(const Graph& g, const ForcingState& s, Force f, Rule r);
VertexStatus vertex_status(const Graph& g, const ForcingState& s, int v, Rule r);
std::vector<Force> valid_forces(const Graph& g, const ForcingState& s, Rule r);

/// Applies one force, validating it against the current state.
ForcingState apply_force(const Graph& g, const ForcingState& s, Force f, Rule r);

/// Applies a chronological list in order; throws ChronologyError with the
/// index of the first invalid force.
ForcingState execute_chronological(const Graph& g, VertexSet base,
                                   const std::vector<Force>& list, Rule r);

void validate_force_set(const Graph& g, const ForceSet& fs);

/// Greedy earliest scheduling; throws if the force set is not linearizable
/// (some force never becomes schedulable). Also asserts that the rounds
/// flattened in order execute as a chronological list.
RoundSchedule round_decompose(const Graph& g, const ForceSet& fs, Rule r);

// ---- terminus / reversal / augmentation ----

/// Vertices that perform no force; requires fs to color all of V(G).
VertexSet terminus(const Graph& g, const ForceSet& fs);

/// Every force reversed, based at the terminus.
ForceSet reverse_forces(const Graph& g, const ForceSet& fs);

/// g plus one edge per (hop) force; throws if any force's endpoints are
/// already adjacent, which signals fs was not a hop force set on g.
Graph augment(const Graph& g, const ForceSet& fs);

// ---- certificate serialization ----

/// {"base": [...], "forces": [{"src","dst","round"}...], "rule": "...", "pt": n}
nlohmann::json schedule_to_json(const RoundSchedule& sched, Rule r);

}  // namespace hopforce

#endif
