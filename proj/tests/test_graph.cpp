#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "test_helpers.hpp"

using namespace hopforce;
using hopforce::testing::permuted;
using hopforce::testing::random_graph;

namespace {

// Independent graph6 encoder for cross-checking write_graph6.
std::string naive_g6(const Graph& g) {
  std::string out(1, static_cast<char>(g.n + 63));
  std::vector<int> bits;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int val = 0;
    for (int b = 0; b < 6; ++b) val = val * 2 + bits[k + b];
    out.push_back(static_cast<char>(val + 63));
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 basics") {
  Graph star5 = parse_graph6("D?{");
  CHECK(star5.n == 5);
  CHECK(write_graph6(star5) == "D?{");

  Graph k1 = parse_graph6("@");
  CHECK(k1.n == 1);
  CHECK(k1.edge_count() == 0);
  CHECK(write_graph6(k1) == "@");

  CHECK(write_graph6(empty_graph(2)) == "A?");

  Graph pet = petersen_graph();
  CHECK(write_graph6(pet) == naive_g6(pet));
  CHECK(parse_graph6(write_graph6(pet)) == pet);
}

TEST_CASE("graph6 round-trips on random graphs") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(rng, 1 + i % 10, 0.4);
    CHECK(parse_graph6(write_graph6(g)) == g);
    CHECK(write_graph6(g) == naive_g6(g));
  }
}

TEST_CASE("graph6 parse errors carry offsets") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6ParseError);
  CHECK_THROWS_AS(parse_graph6("D?"), Graph6ParseError);     // truncated
  CHECK_THROWS_AS(parse_graph6("D?{{"), Graph6ParseError);   // trailing bytes
  CHECK_THROWS_AS(parse_graph6("~??"), Graph6ParseError);    // n > cap
  CHECK_THROWS_AS(parse_graph6("\x1f"), Graph6ParseError);   // byte below range
  try {
    parse_graph6("D?");
  } catch (const Graph6ParseError& e) {
    CHECK(e.offset == 2);
  }
}

TEST_CASE("families") {
  Graph pet = make_family("petersen", {});
  CHECK(pet.n == 10);
  CHECK(pet.edge_count() == 15);
  // strongly regular (10, 3, 0, 1)
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) {
      int common = popcount(pet.adj[u] & pet.adj[v]);
      CHECK(common == (pet.has_edge(u, v) ? 0 : 1));
    }

  Graph k35 = make_family("complete_bipartite", {3, 5});
  CHECK(k35.n == 8);
  CHECK(k35.edge_count() == 15);
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (u != v) CHECK(!k35.has_edge(u, v));

  Graph aug = make_family("kst_augmented", {3, 5});
  CHECK(aug.n == 8);
  CHECK(aug.edge_count() == 15 + 6);
  CHECK(!aug.has_edge(3, 4));  // the special vertex stays nonadjacent to V'

  CHECK(make_family("cross", {}) == spider_graph(1, 1, 3));
  CHECK_THROWS_AS(make_family("moebius", {3}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("cycle", {2}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(33), std::invalid_argument);
}

TEST_CASE("cartesian product") {
  Graph p = cartesian_product(complete_graph(4), empty_graph(5));
  CHECK(p.n == 20);
  CHECK(p.edge_count() == 30);  // 5 copies of K_4

  Graph h = cycle_graph(5);
  Graph idp = cartesian_product(Graph(1), h);
  CHECK(canonical_g6(idp) == canonical_g6(h));

  Graph ksp2 = cartesian_product(complete_graph(3), path_graph(2));
  CHECK(ksp2.n == 6);
  CHECK(ksp2.edge_count() == 2 * 3 + 3);
  CHECK_THROWS_AS(cartesian_product(complete_graph(8), empty_graph(8)),
                  std::invalid_argument);
}

TEST_CASE("structural parameters") {
  CHECK(vertex_connectivity(petersen_graph()) == 3);
  StructuralReport cross = structural_report(cross_graph());
  CHECK(cross.kappa == 1);
  CHECK(cross.alpha == 4);
  StructuralReport k35 = structural_report(complete_bipartite(3, 5));
  CHECK(k35.kappa == 3);
  CHECK(k35.alpha == 5);
  CHECK(vertex_connectivity(complete_graph(6)) == 5);
  CHECK(vertex_connectivity(Graph(1)) == 0);
  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  CHECK(vertex_connectivity(disconnected) == 0);
}

TEST_CASE("Whitney inequality kappa <= delta on all small graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n))
      CHECK(vertex_connectivity(g) <= min_degree(g));
}

TEST_CASE("canonical form is isomorphism-invariant") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 7;  // up to 8
    Graph g = random_graph(rng, n, 0.5);
    std::string canon = canonical_g6(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int rep = 0; rep < 10; ++rep) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_g6(permuted(g, perm)) == canon);
    }
  }
}

TEST_CASE("canonical form separates the 11 graphs on 4 vertices") {
  std::set<std::string> canon;
  for (VertexSet mask = 0; mask < 64; ++mask) {
    Graph g(4);
    int idx = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j, ++idx)
        if (mask & bit(idx)) g.add_edge(i, j);
    canon.insert(canonical_g6(g));
  }
  CHECK(canon.size() == 11);

  Graph two_k2(4), k2_e2(4);
  two_k2.add_edge(0, 1);
  two_k2.add_edge(2, 3);
  k2_e2.add_edge(0, 1);
  CHECK(canonical_g6(two_k2) != canonical_g6(k2_e2));
}

TEST_CASE("canonical form handles symmetric graphs at n >= 10") {
  CHECK(canonical_g6(complete_graph(12)) == write_graph6(complete_graph(12)));
  CHECK(canonical_g6(empty_graph(12)) == write_graph6(empty_graph(12)));
  std::mt19937 rng(4242);
  std::vector<int> perm(12);
  std::iota(perm.begin(), perm.end(), 0);
  Graph c12 = cycle_graph(12);
  std::string canon = canonical_g6(c12);
  for (int rep = 0; rep < 5; ++rep) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_g6(permuted(c12, perm)) == canon);
  }
  Graph k66 = complete_bipartite(6, 6);
  std::string canon66 = canonical_g6(k66);
  for (int rep = 0; rep < 3; ++rep) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_g6(permuted(k66, perm)) == canon66);
  }
}

TEST_CASE("induced subgraph tests") {
  Graph two_k2(4);
  two_k2.add_edge(0, 1);
  two_k2.add_edge(2, 3);
  auto emb = induced_subgraph_embedding(two_k2, cycle_graph(6));
  REQUIRE(emb.has_value());
  // the embedding preserves edges and non-edges
  Graph c6 = cycle_graph(6);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(two_k2.has_edge(i, j) == c6.has_edge((*emb)[i], (*emb)[j]));

  CHECK(!is_induced_subgraph(empty_graph(4), complete_graph(4)));
  CHECK(is_induced_subgraph(petersen_graph(), petersen_graph()));
}

TEST_CASE("induced subgraph agrees with the all-injections oracle") {
  std::mt19937 rng(999);
  auto oracle = [](const Graph& h, const Graph& g) {
    std::vector<int> verts(g.n);
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<int> sel(h.n);
    std::function<bool(int, VertexSet)> rec = [&](int i, VertexSet used) {
      if (i == h.n) return true;
      for (int c = 0; c < g.n; ++c) {
        if (used & bit(c)) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
          ok = h.has_edge(j, i) == g.has_edge(sel[j], c);
        if (!ok) continue;
        sel[i] = c;
        if (rec(i + 1, used | bit(c))) return true;
      }
      return false;
    };
    return rec(0, 0);
  };
  for (int trial = 0; trial < 60; ++trial) {
    Graph h = random_graph(rng, 2 + trial % 3, 0.5);  // up to 4
    Graph g = random_graph(rng, 5 + trial % 3, 0.5);  // up to 7
    CHECK(is_induced_subgraph(h, g) == oracle(h, g));
  }
}

TEST_CASE("identify and delete operations") {
  CHECK(identify_empty_pair(empty_graph(2), 0, 1) == Graph(1));
  CHECK(delete_edge(complete_graph(2), 0, 1) == empty_graph(2));
  CHECK(canonical_g6(delete_edge(complete_graph(3), 0, 1)) ==
        canonical_g6(path_graph(3)));
  CHECK_THROWS_AS(identify_empty_pair(complete_graph(2), 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(delete_edge(empty_graph(2), 0, 1), std::invalid_argument);

  // K_1 x empty(3): identify twice down to K_1
  Graph e3 = cartesian_product(Graph(1), empty_graph(3));
  Graph once = identify_empty_pair(e3, 0, 1);
  Graph twice = identify_empty_pair(once, 0, 1);
  CHECK(twice == Graph(1));

  // deleting all edges of K_n yields the empty graph in C(n,2) steps
  Graph g = complete_graph(5);
  int steps = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      g = delete_edge(g, i, j);
      ++steps;
    }
  CHECK(steps == 10);
  CHECK(g == empty_graph(5));

  // merged neighborhoods are unions; no loops or parallel edges can appear
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    Graph r = random_graph(rng, 6, 0.4);
    for (int u = 0; u < r.n; ++u)
      for (int v = u + 1; v < r.n; ++v) {
        if (r.has_edge(u, v)) continue;
        Graph m = identify_empty_pair(r, u, v);
        for (int w = 0; w < m.n; ++w) {
          CHECK(!(m.adj[w] & bit(w)));
          for_each_vertex(m.adj[w], [&](int x) { CHECK(m.has_edge(x, w)); });
        }
      }
  }
}

TEST_CASE("isomorphism class counts") {
  CHECK(all_graphs(1).size() == 1);
  CHECK(all_graphs(2).size() == 2);
  CHECK(all_graphs(3).size() == 4);
  CHECK(all_graphs(4).size() == 11);
  CHECK(all_graphs(5).size() == 34);
  CHECK(all_graphs(6).size() == 156);
}
