#include "hopforce/graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace hopforce {

Graph::Graph(int n_) : n(n_), adj(static_cast<std::size_t>(n_ > 0 ? n_ : 0), 0) {
  if (n_ < 1 || n_ > kMaxVertices)
    throw std::invalid_argument("Graph: vertex count must be in [1, 32], got " +
                                std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("add_edge: bad endpoints");
  adj[u] |= bit(v);
  adj[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  adj[u] &= ~bit(v);
  adj[v] &= ~bit(u);
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += degree(v);
  return total / 2;
}

// ---------------------------------------------------------------- graph6

Graph parse_graph6(const std::string& raw) {
  std::string text = raw;
  const std::string header = ">>graph6<<";
  std::size_t base = 0;
  if (text.rfind(header, 0) == 0) {
    base = header.size();
    text = text.substr(header.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  if (text.empty()) throw Graph6ParseError("empty graph6 record", base);

  auto check_byte = [&](std::size_t i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw Graph6ParseError("byte out of graph6 range", base + i);
    return static_cast<int>(c) - 63;
  };

  int first = check_byte(0);
  if (first == 63)  // '~' marks a multi-byte vertex count, always above our cap
    throw Graph6ParseError("vertex count exceeds the 32-vertex cap", base);
  int n = first;
  if (n < 1) throw Graph6ParseError("vertex count must be at least 1", base);
  if (n > kMaxVertices)
    throw Graph6ParseError("vertex count exceeds the 32-vertex cap", base);

  int nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() < 1 + nbytes)
    throw Graph6ParseError("truncated bit-vector", base + text.size());
  if (text.size() > 1 + nbytes)
    throw Graph6ParseError("trailing bytes after bit-vector", base + 1 + nbytes);

  Graph g(n);
  int bit_index = 0;
  for (std::size_t k = 0; k < nbytes; ++k) {
    int val = check_byte(1 + k);
    for (int b = 5; b >= 0; --b, ++bit_index) {
      int v = (val >> b) & 1;
      if (bit_index >= nbits) {
        if (v != 0)
          throw Graph6ParseError("nonzero padding bit", base + 1 + k);
        continue;
      }
      if (v) {
        // column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
        int j = 1, acc = 0;
        while (acc + j <= bit_index) acc += j, ++j;
        int i = bit_index - acc;
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(g.n + 63));
  int nbits = g.n * (g.n - 1) / 2;
  int val = 0, filled = 0;
  auto flush = [&]() {
    out.push_back(static_cast<char>(val + 63));
    val = 0;
    filled = 0;
  };
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      val = (val << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) flush();
    }
  if (filled > 0) {
    val <<= (6 - filled);
    flush();
  }
  (void)nbits;
  return out;
}

// ---------------------------------------------------------------- families

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph wheel_graph(int n) {
  if (n < 4) throw std::invalid_argument("wheel: n >= 4 required");
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == n - 1 ? 1 : i + 1);
  }
  return g;
}

Graph star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star: n >= 2 required");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph complete_bipartite(int s, int t) {
  if (s < 0 || t < 0 || s + t < 1)
    throw std::invalid_argument("complete_bipartite: bad part sizes");
  Graph g(s + t);
  for (int u = 0; u < s; ++u)
    for (int v = s; v < s + t; ++v) g.add_edge(u, v);
  return g;
}

Graph spider_graph(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("spider: legs must have length >= 1");
  Graph g(a + b + c + 1);
  int next = 1;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < len; ++i, ++next) {
      g.add_edge(prev, next);
      prev = next;
    }
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return g;
}

Graph kst_augmented(int s, int t) {
  if (s < 0 || t < 1) throw std::invalid_argument("kst_augmented: need s >= 0, t >= 1");
  Graph g = complete_bipartite(s, t);
  for (int u = s + 1; u < s + t; ++u)
    for (int v = u + 1; v < s + t; ++v) g.add_edge(u, v);
  return g;
}

Graph cross_graph() { return spider_graph(1, 1, 3); }

Graph make_family(const std::string& family, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family '" + family + "' expects " +
                                  std::to_string(k) + " parameter(s)");
  };
  if (family == "path") { need(1); return path_graph(params[0]); }
  if (family == "cycle") { need(1); return cycle_graph(params[0]); }
  if (family == "complete") { need(1); return complete_graph(params[0]); }
  if (family == "empty") { need(1); return empty_graph(params[0]); }
  if (family == "wheel") { need(1); return wheel_graph(params[0]); }
  if (family == "star") { need(1); return star_graph(params[0]); }
  if (family == "complete_bipartite") { need(2); return complete_bipartite(params[0], params[1]); }
  if (family == "spider") { need(3); return spider_graph(params[0], params[1], params[2]); }
  if (family == "petersen") { need(0); return petersen_graph(); }
  if (family == "kst_augmented") { need(2); return kst_augmented(params[0], params[1]); }
  if (family == "ksp2") { need(1); return cartesian_product(complete_graph(params[0]), path_graph(2)); }
  if (family == "cross") { need(0); return cross_graph(); }
  throw std::invalid_argument("unknown family '" + family + "'");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  long long total = static_cast<long long>(g.n) * h.n;
  if (total > kMaxVertices)
    throw std::invalid_argument("cartesian_product: product exceeds 32 vertices");
  Graph p(static_cast<int>(total));
  auto id = [&](int i, int j) { return i * h.n + j; };
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < h.n; ++j) {
      for_each_vertex(g.adj[i] & ~(full_set(i + 1)), [&](int i2) {
        p.add_edge(id(i, j), id(i2, j));
      });
      for_each_vertex(h.adj[j] & ~(full_set(j + 1)), [&](int j2) {
        p.add_edge(id(i, j), id(i, j2));
      });
    }
  return p;
}

// ---------------------------------------------------------------- structure

namespace {

bool connected_within(const Graph& g, VertexSet keep) {
  if (!keep) return true;
  VertexSet start = bit(lowest_vertex(keep));
  VertexSet seen = start;
  VertexSet frontier = start;
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.adj[v]; });
    next &= keep & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == keep;
}

}  // namespace

bool is_connected(const Graph& g) { return connected_within(g, g.vertices()); }

int min_degree(const Graph& g) {
  int d = g.n;
  for (int v = 0; v < g.n; ++v) d = std::min(d, g.degree(v));
  return d;
}

int vertex_connectivity(const Graph& g) {
  if (g.n == 1) return 0;
  if (!is_connected(g)) return 0;
  int delta = min_degree(g);
  if (delta == g.n - 1) {
    bool complete = true;
    for (int v = 0; v < g.n && complete; ++v) complete = g.degree(v) == g.n - 1;
    if (complete) return g.n - 1;
  }
  // Brute-force minimum vertex cut; kappa <= delta so the sweep terminates.
  for (int k = 1; k <= delta; ++k) {
    bool found = false;
    for_each_subset_lex(g.n, k, [&](VertexSet cut) {
      if (!connected_within(g, g.vertices() & ~cut)) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return k;
  }
  return delta;
}

namespace {

int mis_search(const Graph& g, VertexSet cand, int current, int& best) {
  if (current + popcount(cand) <= best) return best;
  if (!cand) {
    best = std::max(best, current);
    return best;
  }
  // Branch on a highest-degree candidate: either exclude it or take it.
  int pick = -1, pick_deg = -1;
  for_each_vertex(cand, [&](int v) {
    int d = popcount(g.adj[v] & cand);
    if (d > pick_deg) pick_deg = d, pick = v;
  });
  if (pick_deg == 0) {
    best = std::max(best, current + popcount(cand));
    return best;
  }
  mis_search(g, cand & ~(g.adj[pick] | bit(pick)), current + 1, best);
  mis_search(g, cand & ~bit(pick), current, best);
  return best;
}

}  // namespace

int independence_number(const Graph& g) {
  int best = 0;
  mis_search(g, g.vertices(), 0, best);
  return best;
}

StructuralReport structural_report(const Graph& g) {
  return {vertex_connectivity(g), independence_number(g), min_degree(g)};
}

// ---------------------------------------------------------------- canonical

namespace {

// Iterated neighborhood refinement; returns a stable coloring with
// isomorphism-invariant color ids (dense, ordered by signature).
std::vector<int> refine_colors(const Graph& g) {
  std::vector<int> color(g.n);
  for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);
  for (int iter = 0; iter < g.n; ++iter) {
    std::vector<std::pair<std::vector<int>, int>> sigs(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> s;
      s.push_back(color[v]);
      std::vector<int> nb;
      for_each_vertex(g.adj[v], [&](int w) { nb.push_back(color[w]); });
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sigs[v] = {std::move(s), v};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(g.n);
    int id = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++id;
      next[sorted[i].second] = id;
    }
    if (next == color) break;
    color = next;
  }
  return color;
}

struct CanonSearcher {
  const Graph& g;
  int n;
  bool restricted;                 // cell-respecting orderings only (n >= 10)
  std::vector<int> cell_for_pos;   // restricted mode: color required at position
  std::vector<int> color;          // refinement colors
  std::vector<int> cand_order;     // static candidate ordering heuristic

  std::vector<int> cur;
  VertexSet used = 0;
  std::vector<std::uint8_t> cur_bits;

  bool have_best = false;
  std::vector<int> best_order;
  std::vector<std::uint8_t> best_bits;
  int mismatch_pos = -1;  // first bit where cur differs from best (-1: equal)

  explicit CanonSearcher(const Graph& graph) : g(graph), n(graph.n) {
    color = refine_colors(g);
    restricted = n >= 10;
    if (restricted) {
      std::vector<int> verts(n);
      std::iota(verts.begin(), verts.end(), 0);
      std::stable_sort(verts.begin(), verts.end(),
                       [&](int a, int b) { return color[a] < color[b]; });
      cell_for_pos.resize(n);
      for (int p = 0; p < n; ++p) cell_for_pos[p] = color[verts[p]];
    }
    cand_order.resize(n);
    std::iota(cand_order.begin(), cand_order.end(), 0);
    std::stable_sort(cand_order.begin(), cand_order.end(), [&](int a, int b) {
      if (color[a] != color[b]) return color[a] < color[b];
      return a < b;
    });
  }

  void push_vertex(int v) {
    int off = static_cast<int>(cur_bits.size());
    for (std::size_t i = 0; i < cur.size(); ++i)
      cur_bits.push_back(g.has_edge(cur[i], v) ? 1 : 0);
    if (have_best && mismatch_pos < 0) {
      for (std::size_t k = off; k < cur_bits.size(); ++k)
        if (cur_bits[k] != best_bits[k]) {
          mismatch_pos = static_cast<int>(k);
          break;
        }
    }
    cur.push_back(v);
    used |= bit(v);
  }

  void pop_vertex() {
    int v = cur.back();
    cur.pop_back();
    used &= ~bit(v);
    cur_bits.resize(cur_bits.size() - cur.size());
    if (mismatch_pos >= static_cast<int>(cur_bits.size())) mismatch_pos = -1;
  }

  // Prefix comparison for a candidate before descending.
  // Returns +1 if the candidate's segment makes cur > best (prune).
  int compare_segment(int v) const {
    if (!have_best || mismatch_pos >= 0) return -1;
    std::size_t off = cur_bits.size();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      std::uint8_t b = g.has_edge(cur[i], v) ? 1 : 0;
      if (b != best_bits[off + i]) return b > best_bits[off + i] ? 1 : -1;
    }
    return 0;
  }

  void complete() {
    if (have_best) {
      if (mismatch_pos < 0) return;  // identical; keep first found
      if (cur_bits[mismatch_pos] > best_bits[mismatch_pos]) return;
    }
    best_bits = cur_bits;
    best_order = cur;
    have_best = true;
    mismatch_pos = -1;
  }

  // If every unused vertex has the same adjacency both to the prefix and
  // among themselves (complete or empty remainder), the tail bits do not
  // depend on the order; finish in one shot.
  bool uniform_tail() {
    VertexSet rest = full_set(n) & ~used;
    if (popcount(rest) < 2) return false;
    VertexSet row0 = 0;
    bool first = true, uniform = true;
    for_each_vertex(rest, [&](int v) {
      VertexSet to_used = g.adj[v] & used;
      VertexSet within = g.adj[v] & rest;
      bool ok = within == 0 || within == (rest & ~bit(v));
      if (first) {
        row0 = to_used;
        first = false;
      }
      if (!ok || to_used != row0) uniform = false;
    });
    if (!uniform) return false;
    std::size_t depth = cur.size();
    std::vector<int> tail;
    for (int v : cand_order)
      if (rest & bit(v)) tail.push_back(v);
    for (int v : tail) push_vertex(v);
    complete();
    while (cur.size() > depth) pop_vertex();
    return true;
  }

  void dfs() {
    if (static_cast<int>(cur.size()) == n) {
      complete();
      return;
    }
    if (uniform_tail()) return;
    int pos = static_cast<int>(cur.size());
    for (int v : cand_order) {
      if (used & bit(v)) continue;
      if (restricted && color[v] != cell_for_pos[pos]) continue;
      if (compare_segment(v) > 0) continue;
      push_vertex(v);
      dfs();
      pop_vertex();
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.n > 12)
    throw std::invalid_argument("canonical_form: supported for n <= 12 only");
  CanonSearcher s(g);
  s.dfs();
  Graph relabeled(g.n);
  for (int p = 0; p < g.n; ++p)
    for (int q = p + 1; q < g.n; ++q)
      if (g.has_edge(s.best_order[p], s.best_order[q])) relabeled.add_edge(p, q);
  return {s.best_order, write_graph6(relabeled)};
}

std::string canonical_g6(const Graph& g) { return canonical_form(g).g6; }

// ------------------------------------------------------- induced subgraph

namespace {

bool embed_search(const Graph& h, const Graph& g, std::vector<int>& map,
                  VertexSet used, std::size_t i) {
  if (i == static_cast<std::size_t>(h.n)) return true;
  for (int c = 0; c < g.n; ++c) {
    if (used & bit(c)) continue;
    if (g.degree(c) < h.degree(static_cast<int>(i))) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j)
      ok = g.has_edge(map[j], c) == h.has_edge(static_cast<int>(j), static_cast<int>(i));
    if (!ok) continue;
    map[i] = c;
    if (embed_search(h, g, map, used | bit(c), i + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> induced_subgraph_embedding(const Graph& h, const Graph& g) {
  if (h.n > g.n) return std::nullopt;
  std::vector<int> map(h.n, -1);
  if (embed_search(h, g, map, 0, 0)) return map;
  return std::nullopt;
}

bool is_induced_subgraph(const Graph& h, const Graph& g) {
  return induced_subgraph_embedding(h, g).has_value();
}

// ------------------------------------------------- characterization ops

Graph identify_empty_pair(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("identify_empty_pair: u == v");
  if (u < 0 || v < 0 || u >= g.n || v >= g.n)
    throw std::invalid_argument("identify_empty_pair: vertex out of range");
  if (g.has_edge(u, v))
    throw std::invalid_argument("identify_empty_pair: vertices are adjacent");
  int lo = std::min(u, v), hi = std::max(u, v);
  auto relabel = [&](int w) { return w < hi ? w : (w == hi ? lo : w - 1); };
  Graph out(g.n - 1);
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b) {
      if (!g.has_edge(a, b)) continue;
      int ra = relabel(a), rb = relabel(b);
      if (ra != rb && !out.has_edge(ra, rb)) out.add_edge(ra, rb);
    }
  return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.n || v >= g.n || !g.has_edge(u, v))
    throw std::invalid_argument("delete_edge: edge absent");
  Graph out = g;
  out.remove_edge(u, v);
  return out;
}

// --------------------------------------------------- class enumeration

const std::vector<Graph>& all_graphs(int n) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("all_graphs: supported for 1 <= n <= 10");
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  // Fill ascending: extend each (k-1)-class by one vertex with every possible
  // neighborhood, deduplicating by canonical form.
  for (int k = 1; k <= n; ++k) {
    if (cache.count(k)) continue;
    std::vector<Graph> result;
    if (k == 1) {
      result.push_back(Graph(1));
    } else {
      std::map<std::string, Graph> classes;
      for (const Graph& base : cache.at(k - 1)) {
        for (VertexSet mask = 0; mask < bit(k - 1); ++mask) {
          Graph g(k);
          for (int a = 0; a < k - 1; ++a)
            for_each_vertex(base.adj[a] & ~full_set(a + 1),
                            [&](int b) { g.add_edge(a, b); });
          for_each_vertex(mask, [&](int v) { g.add_edge(v, k - 1); });
          std::string key = canonical_g6(g);
          if (!classes.count(key)) classes.emplace(key, parse_graph6(key));
        }
      }
      for (auto& [key, graph] : classes) result.push_back(graph);
    }
    cache.emplace(k, std::move(result));
  }
  return cache.at(n);
}

}  // namespace hopforce
