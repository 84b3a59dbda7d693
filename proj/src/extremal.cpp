#include "hopforce/extremal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace hopforce {

// --------------------------------------------------- th <= t enumeration

namespace {

// Build the quotient of K_a x empty(b+1) given per-row merge masks (bit j of
// merge[r] glues columns j and j+1 in row r) and a set of deleted complete
// edges. Quotient vertices are (row, column-interval) pairs; two are adjacent
// iff they share a column whose edge between the two rows survives.
Graph characterization_quotient(int a, int b, const std::vector<VertexSet>& merge,
                                const std::vector<std::vector<VertexSet>>& deleted) {
  int cols = b + 1;
  // interval id per (row, col)
  std::vector<std::vector<int>> iv(a, std::vector<int>(cols, 0));
  int total = 0;
  for (int r = 0; r < a; ++r) {
    int id = total;
    iv[r][0] = id;
    for (int c = 1; c < cols; ++c) {
      if (!(merge[r] & bit(c - 1))) ++id;
      iv[r][c] = id;
    }
    total = id + 1;
  }
  Graph g(total);
  for (int c = 0; c < cols; ++c)
    for (int r1 = 0; r1 < a; ++r1)
      for (int r2 = r1 + 1; r2 < a; ++r2) {
        if (deleted[c][r1] & bit(r2)) continue;
        int u = iv[r1][c], v = iv[r2][c];
        if (!g.has_edge(u, v)) g.add_edge(u, v);
      }
  return g;
}

}  // namespace

std::vector<std::string> generate_th_le(int t) {
  if (t < 1 || t > 4)
    throw std::invalid_argument(
        "generate_th_le: full enumeration supported for 1 <= t <= 4");
  std::set<std::string> out;
  for (int a = 1; a <= t; ++a) {
    int b = t - a;
    int cols = b + 1;
    int pair_count = a * (a - 1) / 2;
    // one deletion bit per (column, row pair)
    long long del_bits = static_cast<long long>(cols) * pair_count;
    std::vector<VertexSet> merge(a, 0);
    std::function<void(int)> row_rec = [&](int r) {
      if (r == a) {
        for (long long dmask = 0; dmask < (1ll << del_bits); ++dmask) {
          std::vector<std::vector<VertexSet>> deleted(
              cols, std::vector<VertexSet>(a, 0));
          int idx = 0;
          for (int c = 0; c < cols; ++c)
            for (int r1 = 0; r1 < a; ++r1)
              for (int r2 = r1 + 1; r2 < a; ++r2, ++idx)
                if (dmask & (1ll << idx)) deleted[c][r1] |= bit(r2);
          out.insert(canonical_g6(characterization_quotient(a, b, merge, deleted)));
        }
        return;
      }
      for (VertexSet m = 0; m < bit(b); ++m) {
        merge[r] = m;
        row_rec(r + 1);
      }
    };
    row_rec(0);
  }
  return {out.begin(), out.end()};
}

std::vector<std::string> atlas_th_exact(int t) {
  std::vector<std::string> cur = generate_th_le(t);
  if (t == 1) return cur;
  std::vector<std::string> prev = generate_th_le(t - 1);
  std::vector<std::string> out;
  std::set_difference(cur.begin(), cur.end(), prev.begin(), prev.end(),
                      std::back_inserter(out));
  return out;
}

// ----------------------------------------------------------- kangaroos

namespace {

struct LayerStructure {
  int n = 0;
  std::vector<VertexSet> S, T;  // 1-based semantics stored at index i-1
};

// All ways to realize the membership pattern counts: vertices may sit in
// S_i alone, T_j alone, or S_i n T_j with j < i (properties 1-3).
void enumerate_structures(const std::vector<int>& sizes,
                          const std::function<void(const LayerStructure&)>& emit) {
  int r = static_cast<int>(sizes.size());
  struct Cell {
    int s, t;  // 0 = none
  };
  std::vector<Cell> cells;
  for (int i = 1; i <= r; ++i) cells.push_back({i, 0});
  for (int j = 1; j <= r; ++j) cells.push_back({0, j});
  for (int i = 2; i <= r; ++i)
    for (int j = 1; j < i; ++j) cells.push_back({i, j});

  std::vector<int> counts(cells.size(), 0);
  std::vector<int> s_left = sizes, t_left = sizes;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      for (int v : s_left)
        if (v != 0) return;
      for (int v : t_left)
        if (v != 0) return;
      LayerStructure st;
      st.S.assign(r, 0);
      st.T.assign(r, 0);
      int next = 0;
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int k = 0; k < counts[c]; ++k, ++next) {
          if (cells[c].s > 0) st.S[cells[c].s - 1] |= bit(next);
          if (cells[c].t > 0) st.T[cells[c].t - 1] |= bit(next);
        }
      st.n = next;
      emit(st);
      return;
    }
    const Cell& cell = cells[idx];
    int cap = kMaxVertices;
    if (cell.s > 0) cap = std::min(cap, s_left[cell.s - 1]);
    if (cell.t > 0) cap = std::min(cap, t_left[cell.t - 1]);
    for (int k = 0; k <= cap; ++k) {
      counts[idx] = k;
      if (cell.s > 0) s_left[cell.s - 1] -= k;
      if (cell.t > 0) t_left[cell.t - 1] -= k;
      rec(idx + 1);
      if (cell.s > 0) s_left[cell.s - 1] += k;
      if (cell.t > 0) t_left[cell.t - 1] += k;
    }
    counts[idx] = 0;
  };
  rec(0);
}

std::vector<int> layer_sizes(const std::vector<int>& parts, KangarooSizing sizing) {
  std::vector<int> sizes;
  for (int k : parts) {
    if (k < 1) throw std::invalid_argument("kangaroo parts must be positive");
    sizes.push_back(sizing == KangarooSizing::PartSize ? k : k + 1);
  }
  return sizes;
}

bool edge_allowed(const LayerStructure& st, int u, int v) {
  int r = static_cast<int>(st.S.size());
  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j) {
      bool u_in_Si = st.S[i - 1] & bit(u), v_in_Tj = st.T[j - 1] & bit(v);
      bool v_in_Si = st.S[i - 1] & bit(v), u_in_Tj = st.T[j - 1] & bit(u);
      if ((u_in_Si && v_in_Tj) || (v_in_Si && u_in_Tj)) return false;
    }
  return true;
}

bool domination_holds(const Graph& g, const LayerStructure& st) {
  int r = static_cast<int>(st.S.size());
  for (int i = 2; i <= r; ++i) {
    bool ok = true;
    for_each_vertex(st.S[i - 1], [&](int u) {
      if (st.T[i - 2] & bit(u)) return;  // in T_{i-1} itself
      if (!(g.adj[u] & st.T[i - 2])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> generate_kangaroos_with_sizing(const std::vector<int>& parts,
                                                        KangarooSizing sizing) {
  std::vector<int> sizes = layer_sizes(parts, sizing);
  int max_n = 0;
  for (int s : sizes) max_n += 2 * s;
  if (max_n > 12)
    throw std::invalid_argument("generate_kangaroos: instance too large (n > 12)");

  std::set<std::string> out;
  enumerate_structures(sizes, [&](const LayerStructure& st) {
    std::vector<std::pair<int, int>> free_pairs;
    for (int u = 0; u < st.n; ++u)
      for (int v = u + 1; v < st.n; ++v)
        if (edge_allowed(st, u, v)) free_pairs.push_back({u, v});
    if (free_pairs.size() > 24)
      throw std::invalid_argument("generate_kangaroos: edge space too large");
    for (VertexSet emask = 0; emask < (1u << free_pairs.size()); ++emask) {
      Graph g(st.n);
      for (std::size_t e = 0; e < free_pairs.size(); ++e)
        if (emask & bit(static_cast<int>(e)))
          g.add_edge(free_pairs[e].first, free_pairs[e].second);
      if (!domination_holds(g, st)) continue;
      out.insert(canonical_g6(g));
    }
  });
  return {out.begin(), out.end()};
}

KangarooSizing resolved_kangaroo_sizing() {
  static std::once_flag once;
  static KangarooSizing resolved = KangarooSizing::PartSizePlusOne;
  std::call_once(once, [] {
    // The anchor: G_0 must be the triple {2K_2, K_2 u empty(2), empty(4)}.
    std::set<std::string> anchor;
    {
      Graph two_k2(4);
      two_k2.add_edge(0, 1);
      two_k2.add_edge(2, 3);
      anchor.insert(canonical_g6(two_k2));
      Graph k2_e2(4);
      k2_e2.add_edge(0, 1);
      anchor.insert(canonical_g6(k2_e2));
      anchor.insert(canonical_g6(empty_graph(4)));
    }
    for (KangarooSizing s : {KangarooSizing::PartSize, KangarooSizing::PartSizePlusOne}) {
      std::vector<std::string> got = generate_kangaroos_with_sizing({1}, s);
      if (std::set<std::string>(got.begin(), got.end()) == anchor) {
        resolved = s;
        return;
      }
    }
  });
  return resolved;
}

std::vector<std::string> generate_kangaroos(const std::vector<int>& parts) {
  std::vector<std::string> out =
      generate_kangaroos_with_sizing(parts, resolved_kangaroo_sizing());
  for (const std::string& g6 : out)
    if (!is_kangaroo(parse_graph6(g6), parts))
      throw std::logic_error("kangaroo generation failed structure recovery");
  return out;
}

// ---- structure recovery ----

namespace {

struct KangarooRecovery {
  const Graph& g;
  std::vector<int> sizes;
  int r;
  std::vector<VertexSet> S, T;
  std::vector<int> s_left, t_left;

  KangarooRecovery(const Graph& graph, const std::vector<int>& sz)
      : g(graph), sizes(sz), r(static_cast<int>(sz.size())), S(r, 0), T(r, 0),
        s_left(sz), t_left(sz) {}

  bool forbidden_edge(int u, int si, int ti, int v, int sj, int tj) const {
    if (!g.has_edge(u, v)) return false;
    // no edges between S_i and T_j for i <= j
    if (si > 0 && tj > 0 && si <= tj) return true;
    if (sj > 0 && ti > 0 && sj <= ti) return true;
    return false;
  }

  bool dominated_final() const {
    for (int i = 2; i <= r; ++i) {
      bool ok = true;
      for_each_vertex(S[i - 1], [&](int u) {
        if (T[i - 2] & bit(u)) return;
        if (!(g.adj[u] & T[i - 2])) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  bool assign(int v, std::vector<std::pair<int, int>>& chosen) {
    if (v == g.n) {
      for (int x : s_left)
        if (x) return false;
      for (int x : t_left)
        if (x) return false;
      return dominated_final();
    }
    // remaining capacity must cover remaining vertices
    int remaining = g.n - v;
    int cap = 0;
    for (int i = 0; i < r; ++i) cap += s_left[i] + t_left[i];
    if (cap < remaining) return false;

    auto try_pattern = [&](int si, int ti) -> bool {
      if (si > 0 && s_left[si - 1] == 0) return false;
      if (ti > 0 && t_left[ti - 1] == 0) return false;
      for (int u = 0; u < v; ++u)
        if (forbidden_edge(u, chosen[u].first, chosen[u].second, v, si, ti))
          return false;
      if (si > 0) --s_left[si - 1], S[si - 1] |= bit(v);
      if (ti > 0) --t_left[ti - 1], T[ti - 1] |= bit(v);
      chosen[v] = {si, ti};
      bool ok = assign(v + 1, chosen);
      if (si > 0) ++s_left[si - 1], S[si - 1] &= ~bit(v);
      if (ti > 0) ++t_left[ti - 1], T[ti - 1] &= ~bit(v);
      return ok;
    };

    for (int si = 1; si <= r; ++si)
      if (try_pattern(si, 0)) return true;
    for (int ti = 1; ti <= r; ++ti)
      if (try_pattern(0, ti)) return true;
    for (int si = 2; si <= r; ++si)
      for (int ti = 1; ti < si; ++ti)
        if (try_pattern(si, ti)) return true;
    return false;
  }
};

}  // namespace

bool is_kangaroo_with_sizing(const Graph& g, const std::vector<int>& parts,
                             KangarooSizing sizing) {
  std::vector<int> sizes = layer_sizes(parts, sizing);
  int max_n = 0;
  for (int s : sizes) max_n += 2 * s;
  if (g.n > max_n || g.n < 1) return false;
  KangarooRecovery rec(g, sizes);
  std::vector<std::pair<int, int>> chosen(g.n, {0, 0});
  return rec.assign(0, chosen);
}

bool is_kangaroo(const Graph& g, const std::vector<int>& parts) {
  return is_kangaroo_with_sizing(g, parts, resolved_kangaroo_sizing());
}

bool kangaroo_structure_valid(const Graph& g, const std::vector<int>& parts,
                              const std::vector<VertexSet>& S,
                              const std::vector<VertexSet>& T,
                              KangarooSizing sizing) {
  std::vector<int> sizes = layer_sizes(parts, sizing);
  int r = static_cast<int>(sizes.size());
  if (static_cast<int>(S.size()) != r || static_cast<int>(T.size()) != r)
    return false;
  VertexSet cover = 0;
  for (int i = 0; i < r; ++i) {
    if (popcount(S[i]) != sizes[i] || popcount(T[i]) != sizes[i]) return false;
    cover |= S[i] | T[i];
    for (int j = i + 1; j < r; ++j)
      if ((S[i] & S[j]) || (T[i] & T[j])) return false;
    for (int j = i; j < r; ++j)
      if (S[i] & T[j]) return false;  // S_i n T_j empty for i <= j
  }
  if (cover != full_set(g.n)) return false;
  LayerStructure st;
  st.n = g.n;
  st.S = S;
  st.T = T;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v) && !edge_allowed(st, u, v)) return false;
  return domination_holds(g, st);
}

// --------------------------------------------------------------- G_k

namespace {

void compositions_of(int total, std::vector<int>& prefix,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (total == 0) {
    emit(prefix);
    return;
  }
  for (int first = 1; first <= total; ++first) {
    prefix.push_back(first);
    compositions_of(total - first, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::string> generate_Gk(int k) {
  if (k < 0 || k > 1)
    throw std::invalid_argument("generate_Gk: supported for k in {0, 1}");
  static std::mutex mu;
  static std::map<int, std::vector<std::string>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;

  std::set<std::string> members;
  std::vector<int> prefix;
  compositions_of(k + 1, prefix, [&](const std::vector<int>& parts) {
    for (const std::string& g6 : generate_kangaroos(parts)) members.insert(g6);
  });

  // Minimization: drop members that contain another member induced.
  std::vector<std::string> all(members.begin(), members.end());
  std::vector<Graph> graphs;
  for (const std::string& s : all) graphs.push_back(parse_graph6(s));
  std::vector<std::string> minimal;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < all.size() && !redundant; ++j) {
      if (i == j) continue;
      if (graphs[j].n < graphs[i].n && is_induced_subgraph(graphs[j], graphs[i]))
        redundant = true;
      // equal order, different canonical string: cannot embed induced
    }
    if (!redundant) minimal.push_back(all[i]);
  }
  std::sort(minimal.begin(), minimal.end());
  cache.emplace(k, minimal);
  return minimal;
}

bool classify_extreme_ge(const Graph& g, int k) {
  for (const std::string& g6 : generate_Gk(k)) {
    Graph h = parse_graph6(g6);
    if (h.n <= g.n && is_induced_subgraph(h, g)) return false;
  }
  return true;
}

bool classify_extreme_eq(const Graph& g, int k) {
  if (k == 0) return classify_extreme_ge(g, 0);
  return classify_extreme_ge(g, k) && !classify_extreme_ge(g, k - 1);
}

}  // namespace hopforce
