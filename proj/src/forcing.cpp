#include "hopforce/forcing.hpp"

#include <algorithm>

namespace hopforce {

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::H: return "H";
    case Rule::Z: return "Z";
    case Rule::FloorZ: return "floorZ";
  }
  return "?";
}

Rule rule_from_name(const std::string& name) {
  if (name == "H") return Rule::H;
  if (name == "Z") return Rule::Z;
  if (name == "floorZ" || name == "floorz" || name == "FloorZ") return Rule::FloorZ;
  throw std::invalid_argument("unknown rule '" + name + "'");
}

VertexSet RoundSchedule::blue_after(int i) const {
  VertexSet s = base;
  for (int t = 0; t < i && t < static_cast<int>(rounds.size()); ++t)
    for (const Force& f : rounds[t]) s |= bit(f.dst);
  return s;
}

VertexSet RoundSchedule::colored_in_round(int i) const {
  VertexSet s = 0;
  if (i >= 1 && i <= static_cast<int>(rounds.size()))
    for (const Force& f : rounds[i - 1]) s |= bit(f.dst);
  return s;
}

std::vector<Force> RoundSchedule::flatten() const {
  std::vector<Force> out;
  for (const auto& round : rounds) out.insert(out.end(), round.begin(), round.end());
  return out;
}

namespace {

bool hop_valid(const Graph& g, const ForcingState& s, int src, int dst) {
  if (!(s.blue & bit(src)) || (s.extinct & bit(src))) return false;
  if (g.adj[src] & ~s.blue) return false;  // some neighbor still white
  return !(s.blue & bit(dst));
}

bool z_valid(const Graph& g, const ForcingState& s, int src, int dst) {
  if (!(s.blue & bit(src))) return false;
  VertexSet white_nbrs = g.adj[src] & ~s.blue;
  return white_nbrs == bit(dst);
}

}  // namespace

bool force_valid(const Graph& g, const ForcingState& s, Force f, Rule r) {
  if (f.src == f.dst || f.src < 0 || f.dst < 0 || f.src >= g.n || f.dst >= g.n)
    return false;
  switch (r) {
    case Rule::H: return hop_valid(g, s, f.src, f.dst);
    case Rule::Z: return z_valid(g, s, f.src, f.dst);
    case Rule::FloorZ:
      return hop_valid(g, s, f.src, f.dst) || z_valid(g, s, f.src, f.dst);
  }
  return false;
}

VertexStatus vertex_status(const Graph& g, const ForcingState& s, int v, Rule r) {
  if (!(s.blue & bit(v))) return VertexStatus::White;
  if (s.extinct & bit(v)) return VertexStatus::Extinct;
  VertexSet white = full_set(g.n) & ~s.blue;
  bool able = false;
  switch (r) {
    case Rule::H:
      able = (g.adj[v] & ~s.blue) == 0 && white != 0;
      break;
    case Rule::Z:
      able = popcount(g.adj[v] & white) == 1;
      break;
    case Rule::FloorZ:
      able = ((g.adj[v] & ~s.blue) == 0 && white != 0) || popcount(g.adj[v] & white) == 1;
      break;
  }
  return able ? VertexStatus::Active : VertexStatus::Dormant;
}

std::vector<Force> valid_forces(const Graph& g, const ForcingState& s, Rule r) {
  std::vector<Force> out;
  VertexSet white = full_set(g.n) & ~s.blue;
  for_each_vertex(s.blue, [&](int v) {
    if ((r == Rule::H || r == Rule::FloorZ) && !(s.extinct & bit(v)) &&
        (g.adj[v] & ~s.blue) == 0) {
      for_each_vertex(white, [&](int w) { out.push_back({v, w}); });
    }
    if (r == Rule::Z || r == Rule::FloorZ) {
      VertexSet wn = g.adj[v] & white;
      if (popcount(wn) == 1) {
        Force f{v, lowest_vertex(wn)};
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
      }
    }
  });
  return out;
}

ForcingState apply_force(const Graph& g, const ForcingState& s, Force f, Rule r) {
  if (!force_valid(g, s, f, r))
    throw std::invalid_argument("apply_force: force " + std::to_string(f.src) + "->" +
                                std::to_string(f.dst) + " is not valid");
  // The source is recorded as having forced under every rule; Z validity
  // never consults it.
  return {s.blue | bit(f.dst), s.extinct | bit(f.src)};
}

ForcingState execute_chronological(const Graph& g, VertexSet base,
                                   const std::vector<Force>& list, Rule r) {
  ForcingState s{base, 0};
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!force_valid(g, s, list[i], r))
      throw ChronologyError("invalid force in chronological list", static_cast<int>(i));
    s = {s.blue | bit(list[i].dst), s.extinct | bit(list[i].src)};
  }
  return s;
}

void validate_force_set(const Graph& g, const ForceSet& fs) {
  VertexSet srcs = 0, dsts = 0;
  for (const Force& f : fs.forces) {
    if (f.src == f.dst || f.src < 0 || f.dst < 0 || f.src >= g.n || f.dst >= g.n)
      throw std::invalid_argument("force set: bad force endpoints");
    if (srcs & bit(f.src))
      throw std::invalid_argument("force set: vertex forces twice");
    if (dsts & bit(f.dst))
      throw std::invalid_argument("force set: vertex forced twice");
    srcs |= bit(f.src);
    dsts |= bit(f.dst);
  }
  if (dsts & fs.base)
    throw std::invalid_argument("force set: a force targets a base vertex");
}

RoundSchedule round_decompose(const Graph& g, const ForceSet& fs, Rule r) {
  validate_force_set(g, fs);
  RoundSchedule sched;
  sched.base = fs.base;
  std::vector<Force> remaining = fs.forces;
  ForcingState s{fs.base, 0};
  while (!remaining.empty()) {
    // All forces valid simultaneously against the state before this round.
    std::vector<Force> round;
    for (const Force& f : remaining)
      if (force_valid(g, s, f, r)) round.push_back(f);
    if (round.empty())
      throw std::invalid_argument(
          "round_decompose: force set is not linearizable from its base");
    for (const Force& f : round) {
      s.blue |= bit(f.dst);
      s.extinct |= bit(f.src);
      remaining.erase(std::find(remaining.begin(), remaining.end(), f));
    }
    sched.rounds.push_back(std::move(round));
  }
  // Any within-round order must make a valid chronological list.
  execute_chronological(g, fs.base, sched.flatten(), r);
  return sched;
}

VertexSet terminus(const Graph& g, const ForceSet& fs) {
  RoundSchedule sched = round_decompose(g, fs, Rule::H);
  if (sched.blue_after(sched.pt()) != full_set(g.n))
    throw std::invalid_argument("terminus: force set does not color V(G)");
  VertexSet srcs = 0;
  for (const Force& f : fs.forces) srcs |= bit(f.src);
  return full_set(g.n) & ~srcs;
}

ForceSet reverse_forces(const Graph& g, const ForceSet& fs) {
  ForceSet rev;
  rev.base = terminus(g, fs);
  for (const Force& f : fs.forces) rev.forces.push_back({f.dst, f.src});
  return rev;
}

Graph augment(const Graph& g, const ForceSet& fs) {
  Graph out = g;
  for (const Force& f : fs.forces) {
    if (out.has_edge(f.src, f.dst))
      throw std::invalid_argument(
          "augment: force endpoints already adjacent; not a hop force set");
    out.add_edge(f.src, f.dst);
  }
  return out;
}

nlohmann::json schedule_to_json(const RoundSchedule& sched, Rule r) {
  nlohmann::json forces = nlohmann::json::array();
  for (std::size_t t = 0; t < sched.rounds.size(); ++t)
    for (const Force& f : sched.rounds[t])
      forces.push_back({{"src", f.src}, {"dst", f.dst}, {"round", t + 1}});
  return {{"base", set_to_vector(sched.base)},
          {"forces", forces},
          {"rule", rule_name(r)},
          {"pt", sched.pt()}};
}

}  // namespace hopforce
