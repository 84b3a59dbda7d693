#include "hopforce/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace hopforce {

int lower_bound_kappa(int n, int kappa) {
  if (kappa < 0 || kappa > n - 1)
    throw std::invalid_argument("lower_bound_kappa: need 0 <= kappa <= n-1");
  return static_cast<int>(ceil_two_sqrt(n - kappa)) + kappa - 1;
}

int upper_bound_alpha(int n, int alpha) {
  if (alpha < 1 || alpha > n)
    throw std::invalid_argument("upper_bound_alpha: need 1 <= alpha <= n");
  return n - alpha + static_cast<int>(ceil_two_sqrt(alpha)) - 1;
}

FamilyValues family_formula(const std::string& family, const std::vector<int>& params) {
  auto p = [&](std::size_t i) { return params.at(i); };
  FamilyValues out;
  if (family == "path") {
    int n = p(0);
    if (n >= 2) out.H = 2;
    out.Z = 1;
    out.th_H = static_cast<int>(ceil_two_sqrt(n - 1));
    out.th_Z = static_cast<int>(ceil_two_sqrt(n)) - 1;
    if (n >= 3) out.th_star = PtValue::of((n + 1 + 1) / 2);  // ceil((n+1)/2)
    return out;
  }
  if (family == "cycle") {
    int n = p(0);
    out.H = 3;
    out.Z = 2;
    out.th_H = static_cast<int>(ceil_two_sqrt(n - 2)) + 1;
    return out;
  }
  if (family == "wheel") {
    out.H = 4;
    out.Z = 3;
    return out;
  }
  if (family == "star") {
    int n = p(0);
    out.H = 2;
    if (n >= 3) out.Z = n - 2;
    out.th_H = static_cast<int>(ceil_two_sqrt(n - 1));  // K_{1,n-1}: s=1, t=n-1
    return out;
  }
  if (family == "empty") {
    int n = p(0);
    out.H = 1;
    out.th_H = static_cast<int>(ceil_two_sqrt(n)) - 1;
    return out;
  }
  if (family == "complete") {
    int n = p(0);
    out.H = n;
    out.th_H = n;
    out.th_star = PtValue::inf();
    return out;
  }
  if (family == "complete_bipartite") {
    int s = p(0), t = p(1);
    if (s > t) std::swap(s, t);
    if (s >= 1) out.H = s + 1;
    if (s >= 1 && t >= 2) out.Z = s + t - 2;
    out.th_H = static_cast<int>(ceil_two_sqrt(t)) + s - 1;
    if (s >= 2) out.th_Z = s + t - 1;
    return out;
  }
  if (family == "petersen") {
    out.H = 6;
    out.Z = 5;
    out.th_H = 8;
    out.th_Z = 6;
    return out;
  }
  if (family == "ksp2") {
    int s = p(0);
    out.Z = s;
    out.th_H = static_cast<int>(ceil_two_sqrt(s)) + s - 1;
    out.th_Z = s + 1;
    return out;
  }
  if (family == "cross") {
    out.th_H = 5;
    return out;
  }
  throw std::invalid_argument("family_formula: no closed form for '" + family + "'");
}

// ---------------------------------------------------------------- witnesses

namespace {

// Maximal greedy sweep: every round all active vertices force the lowest
// remaining white vertices. Matches the figures' column-by-column process
// on the families below.
ThrottleCertificate greedy_sweep_certificate(const Graph& g, VertexSet base) {
  ThrottleCertificate cert;
  cert.base = base;
  cert.size = popcount(base);
  cert.schedule.base = base;
  ForcingState s{base, 0};
  VertexSet full = full_set(g.n);
  while (s.blue != full) {
    std::vector<int> actives, targets;
    for_each_vertex(s.blue & ~s.extinct, [&](int v) {
      if ((g.adj[v] & ~s.blue) == 0) actives.push_back(v);
    });
    for_each_vertex(full & ~s.blue, [&](int w) { targets.push_back(w); });
    std::size_t count = std::min(actives.size(), targets.size());
    if (count == 0)
      throw std::logic_error("witness construction stalled; base is wrong");
    std::vector<Force> round;
    for (std::size_t i = 0; i < count; ++i) {
      round.push_back({actives[i], targets[i]});
      s.extinct |= bit(actives[i]);
      s.blue |= bit(targets[i]);
    }
    cert.schedule.rounds.push_back(std::move(round));
  }
  cert.pt = PtValue::of(cert.schedule.pt());
  cert.th = cert.pt + cert.size;
  return cert;
}

int optimal_empty_prefix(int t) {
  int best_b = t, best_val = t;
  for (int b = t; b >= 1; --b) {
    int val = b + (t - b + b - 1) / b;
    if (val <= best_val) {
      best_val = val;
      best_b = b;
    }
  }
  return best_b;
}

}  // namespace

ThrottleCertificate build_snaking_witness(const std::string& family, int n) {
  if (family == "path") {
    if (n < 2) throw std::invalid_argument("snaking witness: path needs n >= 2");
    int m = static_cast<int>(isqrt(n - 1));
    Graph g = path_graph(n);
    VertexSet base = full_set(std::min(m + 1, n));
    ThrottleCertificate cert = greedy_sweep_certificate(g, base);
    if (!(cert.th == PtValue::of(static_cast<int>(ceil_two_sqrt(n - 1)))))
      throw std::logic_error("path snaking witness missed its bound");
    return cert;
  }
  if (family == "cycle") {
    if (n < 3) throw std::invalid_argument("snaking witness: cycle needs n >= 3");
    int m = static_cast<int>(isqrt(n - 2));
    Graph g = cycle_graph(n);
    VertexSet base = full_set(std::min(m + 2, n));
    ThrottleCertificate cert = greedy_sweep_certificate(g, base);
    if (!(cert.th == PtValue::of(static_cast<int>(ceil_two_sqrt(n - 2)) + 1)))
      throw std::logic_error("cycle snaking witness missed its bound");
    return cert;
  }
  throw std::invalid_argument("snaking witness: family must be path or cycle");
}

ThrottleCertificate build_bipartite_witness(int s, int t) {
  if (s < 0 || t < 1 || s > t)
    throw std::invalid_argument("bipartite witness: need 0 <= s <= t, t >= 1");
  Graph g = complete_bipartite(s, t);
  int b = optimal_empty_prefix(t);
  VertexSet base = full_set(s);  // all of U
  for (int i = 0; i < b; ++i) base |= bit(s + i);
  ThrottleCertificate cert = greedy_sweep_certificate(g, base);
  if (!(cert.th == PtValue::of(static_cast<int>(ceil_two_sqrt(t)) + s - 1)))
    throw std::logic_error("bipartite witness missed its bound");
  return cert;
}

// ------------------------------------------------------------ bound reports

std::string BoundReport::csv_header() {
  return "graph6,n,kappa,alpha,delta,lower,exact,upper,tight_lower,tight_upper";
}

std::string BoundReport::csv_row() const {
  std::ostringstream os;
  os << graph6 << ',' << n << ',' << kappa << ',' << alpha << ',' << delta << ','
     << lower_kappa << ',' << (exact ? std::to_string(*exact) : std::string())
     << ',' << upper_alpha << ',' << (tight_lower ? "true" : "false") << ','
     << (tight_upper ? "true" : "false");
  return os.str();
}

BoundReport verify_bounds(const Graph& g, std::optional<int> exact_th) {
  StructuralReport sr = structural_report(g);
  BoundReport rep;
  rep.graph6 = write_graph6(g);
  rep.n = g.n;
  rep.kappa = sr.kappa;
  rep.alpha = sr.alpha;
  rep.delta = sr.delta;
  rep.lower_kappa = lower_bound_kappa(g.n, sr.kappa);
  rep.upper_alpha = upper_bound_alpha(g.n, sr.alpha);
  if (sr.kappa + sr.alpha == g.n) {
    // kappa + alpha = n forces both bounds equal; no search needed.
    if (rep.lower_kappa != rep.upper_alpha)
      throw std::logic_error("kappa+alpha=n but bounds disagree");
    if (exact_th && *exact_th != rep.lower_kappa)
      throw std::logic_error("bound sandwich violated: shortcut != exact");
    rep.exact = rep.lower_kappa;
  } else if (exact_th) {
    rep.exact = exact_th;
  }
  if (rep.exact && (*rep.exact < rep.lower_kappa || *rep.exact > rep.upper_alpha))
    throw std::logic_error("bound sandwich violated for " + rep.graph6);
  if (rep.exact) {
    rep.tight_lower = *rep.exact == rep.lower_kappa;
    rep.tight_upper = *rep.exact == rep.upper_alpha;
  }
  return rep;
}

// ------------------------------------------------- spider restricted search

TreeAdj spider_tree(int a, int b, int c) {
  int n = a + b + c + 1;
  if (n > 64) throw std::invalid_argument("spider_tree: more than 64 vertices");
  TreeAdj adj(n, 0);
  auto link = [&](int u, int v) {
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  };
  int next = 1;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < len; ++i, ++next) {
      link(prev, next);
      prev = next;
    }
  }
  return adj;
}

TreeAdj path_tree(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("path_tree: need 1 <= n <= 64");
  TreeAdj adj(n, 0);
  for (int i = 0; i + 1 < n; ++i) {
    adj[i] |= 1ull << (i + 1);
    adj[i + 1] |= 1ull << i;
  }
  return adj;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
    std::uint64_t h = p.first * 0x9e3779b97f4a7c15ull;
    h ^= p.second + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct OneDormantSearch {
  const TreeAdj& adj;
  int n, k, total_rounds;
  std::uint64_t full;
  std::uint64_t states = 0;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> failed;

  OneDormantSearch(const TreeAdj& a, int k_, int rounds_)
      : adj(a), n(static_cast<int>(a.size())), k(k_), total_rounds(rounds_),
        full(n == 64 ? ~0ull : (1ull << n) - 1) {}

  int dormant_count(std::uint64_t unforced, std::uint64_t blue) const {
    int cnt = 0;
    std::uint64_t rest = unforced;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[v] & ~blue) ++cnt;
    }
    return cnt;
  }

  bool dfs(std::uint64_t blue, std::uint64_t unforced, int rounds_left) {
    std::uint64_t white = full & ~blue;
    if (!white) return true;
    if (rounds_left == 0) return false;
    if (failed.count({blue, unforced})) return false;
    ++states;

    // Exactly one dormant vertex: it sits out, all others force.
    int dorm = -1;
    std::uint64_t rest = unforced;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[v] & ~blue) {
        if (dorm >= 0) return false;  // invariant broken: dead branch
        dorm = v;
      }
    }
    if (dorm < 0) return false;  // impossible on a connected tree with white left

    // Choose k-1 white targets keeping at most one open vertex among the
    // new unforced set {dormant} u targets.
    std::vector<int> whites;
    std::uint64_t w = white;
    while (w) {
      whites.push_back(std::countr_zero(w));
      w &= w - 1;
    }
    int need = k - 1;
    if (static_cast<int>(whites.size()) < need) return false;
    std::vector<int> idx(need);
    for (int i = 0; i < need; ++i) idx[i] = i;
    bool found = false;
    while (!found) {
      std::uint64_t tmask = 0;
      for (int i : idx) tmask |= 1ull << whites[i];
      std::uint64_t nblue = blue | tmask;
      std::uint64_t nunforced = (1ull << dorm) | tmask;
      if (dormant_count(nunforced, nblue) <= 1 &&
          dfs(nblue, nunforced, rounds_left - 1)) {
        found = true;
        break;
      }
      int i = need - 1;
      while (i >= 0 && idx[i] == static_cast<int>(whites.size()) - need + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) failed.insert({blue, unforced});
    return found;
  }
};

}  // namespace

RestrictedSearchResult one_dormant_search(const TreeAdj& adj, int k, int rounds,
                                          int jobs) {
  int n = static_cast<int>(adj.size());
  if (k + rounds * (k - 1) != n)
    throw std::invalid_argument(
        "one_dormant_search: counting argument must be tight (k + rounds*(k-1) == n)");
  if (jobs < 1) jobs = 1;

  std::atomic<bool> achieved{false};
  std::atomic<std::uint64_t> checked{0}, admissible{0}, states{0};

  auto worker = [&](int tid) {
    OneDormantSearch search(adj, k, rounds);
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::uint64_t serial = 0;
    while (true) {
      if (achieved.load(std::memory_order_relaxed)) break;
      if (serial % static_cast<std::uint64_t>(jobs) ==
          static_cast<std::uint64_t>(tid)) {
        ++checked;
        std::uint64_t base = 0;
        for (int i : idx) base |= 1ull << i;
        if (search.dormant_count(base, base) <= 1) {
          ++admissible;
          if (search.dfs(base, base, rounds))
            achieved.store(true, std::memory_order_relaxed);
        }
      }
      ++serial;
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    states += search.states;
  };

  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& th : pool) th.join();

  RestrictedSearchResult res;
  res.achievable = achieved.load();
  res.bases_checked = checked.load();
  res.bases_admissible = admissible.load();
  res.states_explored = states.load();
  return res;
}

SpiderVerdict spider_strict_gap(int m, int jobs) {
  if (m < 2) throw std::invalid_argument("spider_strict_gap: m >= 2 required");
  SpiderVerdict v;
  v.m = m;
  v.n = 9 * m * m + 1;
  if (v.n > 64)
    throw std::invalid_argument("spider_strict_gap: instance exceeds 64 vertices");
  v.lower = 6 * m;
  v.base_size = 3 * m + 1;

  // k + (6m-k)(k-1) >= 9m^2+1 only at k = 3m+1, where it is an equality.
  for (int k = 1; k <= v.lower; ++k) {
    long long colored = k + static_cast<long long>(v.lower - k) * (k - 1);
    if (colored >= v.n) v.feasible_sizes.push_back(k);
  }
  if (v.feasible_sizes != std::vector<int>{v.base_size})
    throw std::logic_error("spider counting argument did not isolate k = 3m+1");

  TreeAdj adj = spider_tree(3 * m * m - 1, 3 * m * m, 3 * m * m + 1);
  v.search = one_dormant_search(adj, v.base_size, v.lower - v.base_size, jobs);
  v.achievable = v.search.achievable;
  return v;
}

}  // namespace hopforce
