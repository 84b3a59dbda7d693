#ifndef HOPFORCE_GRAPH_HPP
#define HOPFORCE_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopforce/util.hpp"

namespace hopforce {

/// Simple undirected graph on vertices 0..n-1, adjacency stored as one
/// bitmask per vertex. Symmetric, loop-free, 1 <= n <= 32.
struct Graph {
  int n = 0;
  std::vector<VertexSet> adj;

  Graph() = default;
  explicit Graph(int n_);

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  int degree(int v) const { return popcount(adj[v]); }
  int edge_count() const;
  VertexSet vertices() const { return full_set(n); }
  VertexSet neighbors(int v) const { return adj[v]; }

  bool operator==(const Graph&) const = default;
};

// ---- graph6 interchange (McKay format, one record per line) ----

struct Graph6ParseError : std::runtime_error {
  std::size_t offset;  // byte offset of the offending character
  Graph6ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// ---- family constructors ----
// Labelings are frozen so certificates are reproducible byte-for-byte:
//   path:     0-1-...-(n-1)
//   cycle:    0-1-...-(n-1)-0
//   wheel:    hub = 0, rim cycle 1..n-1
//   star:     center = 0
//   complete_bipartite(s,t): U = {0..s-1}, V = {s..s+t-1}
//   spider(a,b,c): center = 0, then the legs of lengths a, b, c consecutively
//   petersen: outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5
//   kst_augmented(s,t): K(s,t) = complete_bipartite(s,t) plus a clique on
//                       V' = {s+1..s+t-1}; the special vertex v is vertex s
//   cross:    spider(1,1,3)
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph wheel_graph(int n);   // n >= 4 total vertices
Graph star_graph(int n);    // n >= 2 total vertices, K_{1,n-1}
Graph complete_bipartite(int s, int t);
Graph spider_graph(int a, int b, int c);
Graph petersen_graph();
Graph kst_augmented(int s, int t);
Graph cross_graph();

/// Dispatch by family name as used by the CLI: path, cycle, complete, empty,
/// wheel, star, complete_bipartite, spider, petersen, kst_augmented, cross.
Graph make_family(const std::string& family, const std::vector<int>& params);

/// Cartesian product; vertex (i,j) of g x h maps to index i*|V(h)|+j.
Graph cartesian_product(const Graph& g, const Graph& h);

// ---- structural parameters ----

struct StructuralReport {
  int kappa;  // vertex connectivity (n-1 for complete graphs, 0 if disconnected)
  int alpha;  // independence number
  int delta;  // minimum degree
};

bool is_connected(const Graph& g);
int min_degree(const Graph& g);
int vertex_connectivity(const Graph& g);
int independence_number(const Graph& g);
StructuralReport structural_report(const Graph& g);

// ---- canonical forms (n <= 12) ----

/// order[pos] = original vertex placed at position pos of the canonical
/// labeling; g6 is the graph6 string of the relabeled graph. Isomorphic
/// graphs yield identical strings, non-isomorphic graphs distinct ones.
struct CanonicalForm {
  std::vector<int> order;
  std::string g6;
};

CanonicalForm canonical_form(const Graph& g);
std::string canonical_g6(const Graph& g);

/// True (with one embedding) iff h occurs in g as an induced subgraph:
/// an injective map preserving both edges and non-edges.
std::optional<std::vector<int>> induced_subgraph_embedding(const Graph& h, const Graph& g);
bool is_induced_subgraph(const Graph& h, const Graph& g);

// ---- throttling characterization operations ----

/// Merge non-adjacent u, v into one vertex whose neighborhood is
/// N(u) u N(v). The merged vertex keeps label min(u,v); vertices above
/// max(u,v) shift down by one.
Graph identify_empty_pair(const Graph& g, int u, int v);
Graph delete_edge(const Graph& g, int u, int v);

// ---- isomorphism-class enumeration (test/verification plumbing) ----

/// All isomorphism classes on exactly n vertices (canonical representatives,
/// sorted by canonical string). Cached internally; n <= 7 intended.
const std::vector<Graph>& all_graphs(int n);

}  // namespace hopforce

#endif
