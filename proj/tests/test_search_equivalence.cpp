#include <doctest.h>

#include <functional>
#include <unordered_map>

#include "hopforce/verify.hpp"
#include "test_helpers.hpp"

using namespace hopforce;
using hopforce::testing::random_graph;

namespace {

// Memoized round search with no twin collapse, no admissible bound, and no
// budget pruning: every sub-collection of currently valid forces with
// distinct sources and targets is a candidate round. Slower but independent
// of every optimization in the production searcher.
struct PlainSearcher {
  const Graph& g;
  Rule rule;
  VertexSet full;
  std::unordered_map<std::uint64_t, int> memo;  // -1 = unreachable

  PlainSearcher(const Graph& g_, Rule r_) : g(g_), rule(r_), full(full_set(g_.n)) {}

  int solve(ForcingState s) {
    if (s.blue == full) return 0;
    auto it = memo.find(s.key());
    if (it != memo.end()) return it->second;
    std::vector<Force> cand = valid_forces(g, s, rule);
    int best = -1;
    std::function<void(std::size_t, VertexSet, VertexSet)> rec =
        [&](std::size_t i, VertexSet srcs, VertexSet dsts) {
          if (i == cand.size()) {
            if (!dsts) return;
            int sub = solve({s.blue | dsts, s.extinct | srcs});
            if (sub >= 0 && (best < 0 || sub + 1 < best)) best = sub + 1;
            return;
          }
          rec(i + 1, srcs, dsts);
          if (!(srcs & bit(cand[i].src)) && !(dsts & bit(cand[i].dst)))
            rec(i + 1, srcs | bit(cand[i].src), dsts | bit(cand[i].dst));
        };
    rec(0, 0, 0);
    memo.emplace(s.key(), best);
    return best;
  }
};

}  // namespace

TEST_CASE("pruned searcher equals the plain searcher on random instances") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 70; ++trial) {
    int n = trial < 60 ? 6 : 7;
    Graph g = random_graph(rng, n, 0.2 + 0.12 * (trial % 5));
    for (Rule r : {Rule::H, Rule::FloorZ}) {
      PlainSearcher plain(g, r);
      for (int b = 0; b < 3; ++b) {
        VertexSet base = 0;
        std::uniform_int_distribution<int> pick(0, n - 1);
        int want = 1 + pick(rng) % n;
        while (popcount(base) < want) base |= bit(pick(rng));
        int slow = plain.solve({base, 0});
        PtValue fast = min_propagation_time(g, base, r).pt;
        CHECK((fast.is_inf() ? -1 : fast.value()) == slow);
      }
    }
  }
}

TEST_CASE("collapsed reachability equals plain DFS reachability") {
  std::mt19937 rng(24601);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 4 + trial % 4;
    Graph g = random_graph(rng, n, 0.15 + 0.1 * (trial % 7));
    std::uniform_int_distribution<int> pick(0, n - 1);
    VertexSet base = bit(pick(rng)) | bit(pick(rng));
    for (Rule r : {Rule::H, Rule::Z, Rule::FloorZ})
      CHECK(is_forcing_set(g, base, r).forcing == naive::is_forcing_set(g, base, r));
  }
}
