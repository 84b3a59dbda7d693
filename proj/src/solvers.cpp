#include "hopforce/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace hopforce {

// ------------------------------------------------------------- twin classes

std::vector<int> twin_classes(const Graph& g) {
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      bool open_twin = g.adj[u] == g.adj[v];
      bool closed_twin = (g.adj[u] | bit(u)) == (g.adj[v] | bit(v));
      if (open_twin || closed_twin) parent[find(u)] = find(v);
    }
  std::vector<int> cls(g.n);
  for (int v = 0; v < g.n; ++v) cls[v] = find(v);
  return cls;
}

// ------------------------------------------------------------------ limits

namespace {

struct LimitTracker {
  SearchLimits limits;
  std::uint64_t states = 0;
  std::chrono::steady_clock::time_point start;

  explicit LimitTracker(const SearchLimits& l)
      : limits(l), start(std::chrono::steady_clock::now()) {}

  void tick() {
    if (++states > limits.max_states)
      throw LimitError("search state budget exceeded");
    if ((states & 4095) == 0 && std::isfinite(limits.max_seconds)) {
      double secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start).count();
      if (secs > limits.max_seconds)
        throw LimitError("search time budget exceeded");
    }
  }
};

// Members of each twin class intersected with a mask, ascending, plus the
// prefix masks used for canonical move selection.
struct ClassGroup {
  std::vector<std::vector<int>> members;

  ClassGroup(const std::vector<int>& twin, VertexSet mask) {
    std::unordered_map<int, std::size_t> index;
    for_each_vertex(mask, [&](int v) {
      auto it = index.find(twin[v]);
      if (it == index.end()) {
        index.emplace(twin[v], members.size());
        members.push_back({v});
      } else {
        members[it->second].push_back(v);
      }
    });
  }

  int total() const {
    int t = 0;
    for (const auto& m : members) t += static_cast<int>(m.size());
    return t;
  }

  // selections[j] = all canonical (per-class prefix) masks of j vertices
  std::vector<std::vector<VertexSet>> selections(int maxj) const {
    std::vector<std::vector<VertexSet>> out(maxj + 1);
    std::function<void(std::size_t, int, VertexSet)> rec = [&](std::size_t idx,
                                                               int count,
                                                               VertexSet mask) {
      if (idx == members.size()) {
        out[count].push_back(mask);
        return;
      }
      VertexSet prefix = 0;
      int limit = std::min<int>(static_cast<int>(members[idx].size()), maxj - count);
      rec(idx + 1, count, mask);
      for (int take = 1; take <= limit; ++take) {
        prefix |= bit(members[idx][take - 1]);
        rec(idx + 1, count + take, mask | prefix);
      }
    };
    rec(0, 0, 0);
    return out;
  }
};

struct PtSearcher {
  const Graph& g;
  Rule rule;
  LimitTracker tracker;
  int n;
  VertexSet full;
  int kappa_h = 0;  // admissible-bound strengthening, H only
  std::vector<int> twin;

  static constexpr int kTooDeep = 1 << 28;

  struct Entry {
    int lower = 0;
    int exact = -1;
  };
  std::unordered_map<std::uint64_t, Entry> memo;

  PtSearcher(const Graph& g_, Rule r_, const SearchLimits& lim)
      : g(g_), rule(r_), tracker(lim), n(g_.n), full(full_set(g_.n)),
        twin(twin_classes(g_)) {
    if (rule == Rule::H) kappa_h = vertex_connectivity(g_);
  }

  // cb(srcs, tgts, forces) -> false to stop; forces only set when Materialize.
  template <bool Materialize, class F>
  bool enumerate_moves(const ForcingState& s, F&& cb) {
    VertexSet white = full & ~s.blue;

    // Standard-rule candidates, one bucket per forced target.
    struct ZTarget {
      int dst;
      std::vector<int> srcs;  // one per twin class, ascending
    };
    std::vector<ZTarget> ztargets;
    if (rule != Rule::H) {
      for_each_vertex(s.blue, [&](int v) {
        VertexSet wn = g.adj[v] & white;
        if (popcount(wn) != 1) return;
        int dst = lowest_vertex(wn);
        auto it = std::find_if(ztargets.begin(), ztargets.end(),
                               [&](const ZTarget& z) { return z.dst == dst; });
        if (it == ztargets.end()) {
          ztargets.push_back({dst, {v}});
        } else {
          bool dup = std::any_of(it->srcs.begin(), it->srcs.end(),
                                 [&](int u) { return twin[u] == twin[v]; });
          if (!dup) it->srcs.push_back(v);
        }
      });
    }

    VertexSet hop_src = 0;
    if (rule != Rule::Z) {
      for_each_vertex(s.blue & ~s.extinct, [&](int v) {
        if ((g.adj[v] & ~s.blue) == 0) hop_src |= bit(v);
      });
    }

    ClassGroup src_group(twin, hop_src);
    int src_total = src_group.total();
    std::vector<std::vector<VertexSet>> src_sel;

    bool keep_going = true;
    std::vector<std::pair<int, int>> zchoice;  // (src, dst)

    auto emit_with_zpart = [&]() {
      VertexSet zsrcs = 0, ztgts = 0;
      for (auto [zs, zd] : zchoice) {
        zsrcs |= bit(zs);
        ztgts |= bit(zd);
      }
      VertexSet hop_white = white & ~ztgts;
      ClassGroup tgt_group(twin, hop_white);
      int maxj = std::min(src_total, tgt_group.total());
      if (src_sel.empty() && maxj > 0) src_sel = src_group.selections(src_total);
      auto tgt_sel = tgt_group.selections(maxj);
      int minj = zchoice.empty() ? 1 : 0;
      for (int j = maxj; j >= minj && keep_going; --j) {
        if (j == 0) {
          std::vector<Force> forces;
          if constexpr (Materialize)
            for (auto [zs, zd] : zchoice) forces.push_back({zs, zd});
          keep_going = cb(zsrcs, ztgts, forces);
          continue;
        }
        for (VertexSet sm : src_sel[j]) {
          if (popcount(sm) != j) continue;
          for (VertexSet tm : tgt_sel[j]) {
            std::vector<Force> forces;
            if constexpr (Materialize) {
              for (auto [zs, zd] : zchoice) forces.push_back({zs, zd});
              std::vector<int> ss = set_to_vector(sm), tt = set_to_vector(tm);
              for (std::size_t i = 0; i < ss.size(); ++i)
                forces.push_back({ss[i], tt[i]});
            }
            keep_going = cb(zsrcs | sm, ztgts | tm, forces);
            if (!keep_going) return;
          }
        }
      }
    };

    std::function<void(std::size_t)> zrec = [&](std::size_t idx) {
      if (!keep_going) return;
      if (idx == ztargets.size()) {
        emit_with_zpart();
        return;
      }
      for (int src : ztargets[idx].srcs) {
        zchoice.push_back({src, ztargets[idx].dst});
        zrec(idx + 1);
        zchoice.pop_back();
        if (!keep_going) return;
      }
      zrec(idx + 1);  // leave this target white
    };
    zrec(0);
    return keep_going;
  }

  // Exact minimum rounds from s to all-blue if <= budget, otherwise kTooDeep.
  int solve(ForcingState s, int budget) {
    VertexSet white = full & ~s.blue;
    if (!white) return 0;
    if (budget <= 0) return kTooDeep;
    tracker.tick();

    // At most u - kappa vertices can be forced per round under H while any
    // vertex is white (u = unforced blue count, invariant along a run).
    int u = popcount(s.blue & ~s.extinct);
    int rate = u - kappa_h;
    if (rate <= 0) return kTooDeep;
    int lb = (popcount(white) + rate - 1) / rate;
    if (lb > budget) return kTooDeep;

    std::uint64_t key = s.key();
    {
      auto it = memo.find(key);
      if (it != memo.end()) {
        if (it->second.exact >= 0)
          return it->second.exact <= budget ? it->second.exact : kTooDeep;
        if (it->second.lower > budget) return kTooDeep;
      }
    }

    int best = kTooDeep;
    enumerate_moves<false>(s, [&](VertexSet srcs, VertexSet tgts,
                                  const std::vector<Force>&) {
      int ub = best == kTooDeep ? budget : std::min(budget, best - 1);
      if (ub <= 0) return false;
      int child = solve({s.blue | tgts, s.extinct | srcs}, ub - 1);
      if (child != kTooDeep && child + 1 <= ub) best = child + 1;
      return best != lb;
    });

    Entry& e = memo[key];
    if (best <= budget) {
      e.exact = best;
      e.lower = std::max(e.lower, best);
      return best;
    }
    e.lower = std::max(e.lower, budget + 1);
    return kTooDeep;
  }

  RoundSchedule extract(VertexSet base, int pt) {
    RoundSchedule out;
    out.base = base;
    ForcingState s{base, 0};
    int remaining = pt;
    while (remaining > 0) {
      bool advanced = false;
      enumerate_moves<true>(s, [&](VertexSet srcs, VertexSet tgts,
                                   const std::vector<Force>& forces) {
        ForcingState next{s.blue | tgts, s.extinct | srcs};
        int child = solve(next, remaining - 1);
        if (child <= remaining - 1) {
          out.rounds.push_back(forces);
          s = next;
          advanced = true;
          return false;
        }
        return true;
      });
      if (!advanced) throw std::logic_error("pt schedule extraction failed");
      --remaining;
    }
    return out;
  }
};

// Standard zero forcing propagates deterministically: performing every
// available force each round is optimal, so pt and the final coloring come
// from a simple closure.
PropagationResult z_closure(const Graph& g, VertexSet base) {
  PropagationResult out;
  out.schedule.base = base;
  VertexSet full = full_set(g.n);
  ForcingState s{base, 0};
  while (s.blue != full) {
    std::vector<Force> round;
    VertexSet targeted = 0;
    for (int v = 0; v < g.n; ++v) {
      if (!(s.blue & bit(v))) continue;
      VertexSet wn = g.adj[v] & ~s.blue;
      if (popcount(wn) == 1) {
        int w = lowest_vertex(wn);
        if (!(targeted & bit(w))) {
          round.push_back({v, w});
          targeted |= bit(w);
        }
      }
    }
    if (round.empty()) return {PtValue::inf(), {}};
    for (const Force& f : round) s.extinct |= bit(f.src);
    s.blue |= targeted;
    out.schedule.rounds.push_back(std::move(round));
  }
  out.pt = PtValue::of(out.schedule.pt());
  return out;
}

}  // namespace

// ------------------------------------------------------- reachability (DFS)

namespace {

struct ReachSearcher {
  const Graph& g;
  Rule rule;
  LimitTracker tracker;
  VertexSet full;
  std::vector<int> twin;
  std::unordered_set<std::uint64_t> failed;

  ReachSearcher(const Graph& g_, Rule r_, const SearchLimits& lim)
      : g(g_), rule(r_), tracker(lim), full(full_set(g_.n)),
        twin(twin_classes(g_)) {}

  // Single forces with symmetric sources/targets collapsed to class reps:
  // the lowest white member of each twin class as target, the lowest active
  // member of each class as hop source.
  std::vector<Force> collapsed_forces(const ForcingState& s) const {
    std::vector<Force> out;
    VertexSet white = full & ~s.blue;
    if (rule != Rule::Z) {
      std::vector<int> tgt_rep_list;
      VertexSet cls_done = 0;
      for_each_vertex(white, [&](int w) {
        if (cls_done & bit(twin[w])) return;
        cls_done |= bit(twin[w]);
        tgt_rep_list.push_back(w);
      });
      VertexSet src_done = 0;
      for_each_vertex(s.blue & ~s.extinct, [&](int v) {
        if (g.adj[v] & ~s.blue) return;
        if (src_done & bit(twin[v])) return;
        src_done |= bit(twin[v]);
        for (int w : tgt_rep_list) out.push_back({v, w});
      });
    }
    if (rule != Rule::H) {
      VertexSet zdone = 0;
      for_each_vertex(s.blue, [&](int v) {
        VertexSet wn = g.adj[v] & ~s.blue;
        if (popcount(wn) != 1) return;
        if (zdone & bit(twin[v])) return;
        zdone |= bit(twin[v]);
        Force f{v, lowest_vertex(wn)};
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
      });
    }
    return out;
  }

  bool dfs(ForcingState s, std::vector<Force>& path_rev) {
    if (s.blue == full) return true;
    tracker.tick();
    if (failed.count(s.key())) return false;
    for (const Force& f : collapsed_forces(s)) {
      ForcingState next{s.blue | bit(f.dst), s.extinct | bit(f.src)};
      if (dfs(next, path_rev)) {
        path_rev.push_back(f);
        return true;
      }
    }
    failed.insert(s.key());
    return false;
  }
};

}  // namespace

ForcingWitness is_forcing_set(const Graph& g, VertexSet base, Rule r,
                              const SearchLimits& limits) {
  base &= full_set(g.n);
  if (r == Rule::Z) {
    PropagationResult res = z_closure(g, base);
    if (res.pt.is_inf()) return {false, {}};
    return {true, res.schedule.flatten()};
  }
  ReachSearcher rs(g, r, limits);
  std::vector<Force> path_rev;
  if (!rs.dfs({base, 0}, path_rev)) return {false, {}};
  std::reverse(path_rev.begin(), path_rev.end());
  return {true, std::move(path_rev)};
}

ForcingNumberResult forcing_number(const Graph& g, Rule r,
                                   const SearchLimits& limits) {
  int start = 1;
  if (r == Rule::H) start = min_degree(g) + 1;  // delta+1 <= H(G)
  ReachSearcher rs(g, r, limits);  // failure states shared across bases
  for (int k = start; k <= g.n; ++k) {
    ForcingNumberResult found;
    bool ok = !for_each_subset_lex(g.n, k, [&](VertexSet mask) {
      if (r == Rule::Z) {
        PropagationResult res = z_closure(g, mask);
        if (res.pt.is_inf()) return true;
        found = {k, mask, res.schedule.flatten()};
        return false;
      }
      std::vector<Force> path_rev;
      if (!rs.dfs({mask, 0}, path_rev)) return true;
      std::reverse(path_rev.begin(), path_rev.end());
      found = {k, mask, std::move(path_rev)};
      return false;
    });
    if (ok) return found;
  }
  throw std::logic_error("forcing_number: V(G) must always force");
}

// ------------------------------------------------------------- propagation

PropagationResult min_propagation_time(const Graph& g, VertexSet base, Rule r,
                                       PtValue budget, const SearchLimits& limits) {
  base &= full_set(g.n);
  if (r == Rule::Z) {
    PropagationResult res = z_closure(g, base);
    if (!res.pt.is_inf() && !budget.is_inf() && res.pt.value() > budget.value())
      return {PtValue::inf(), {}};
    return res;
  }
  if (base == full_set(g.n)) {
    RoundSchedule sched;
    sched.base = base;
    return {PtValue::of(0), sched};
  }
  if (base == 0) return {PtValue::inf(), {}};
  int cap = g.n - popcount(base);  // every round colors at least one vertex
  int eff = budget.is_inf() ? cap : std::min(cap, budget.value());
  PtSearcher searcher(g, r, limits);
  int res = searcher.solve({base, 0}, eff);
  if (res == PtSearcher::kTooDeep) return {PtValue::inf(), {}};
  return {PtValue::of(res), searcher.extract(base, res)};
}

// -------------------------------------------------------------- throttling

namespace {

// Optimal empty-graph throttle value min_b b + ceil((t-b)/b) = ceil(2*sqrt(t)-1).
int empty_throttle_value(int t) {
  int best = t;
  for (int b = 1; b <= t; ++b)
    best = std::min(best, b + (t - b + b - 1) / b);
  return best;
}

int rule_lower_bound(const Graph& g, Rule r, int kappa) {
  if (r == Rule::H)
    return static_cast<int>(ceil_two_sqrt(g.n - kappa)) + kappa - 1;
  return static_cast<int>(ceil_two_sqrt(g.n)) - 1;
}

}  // namespace

ThrottleCertificate throttling_number(const Graph& g, Rule r,
                                      const SearchLimits& limits) {
  const int n = g.n;
  int kappa = (r == Rule::H) ? vertex_connectivity(g) : 0;
  int lower = rule_lower_bound(g, r, kappa);

  // Achievable upper bounds seed the incumbent; certificates still come from
  // the enumeration so the first optimal witness in order wins.
  int best_value = n;  // B = V(G), pt = 0
  if (r == Rule::H) {
    int alpha = independence_number(g);
    best_value = std::min(best_value, n - alpha + empty_throttle_value(alpha));
  }

  std::optional<PtSearcher> searcher;
  if (r != Rule::Z) searcher.emplace(g, r, limits);

  ThrottleCertificate best;
  bool done = false;
  for (int b = 1; b <= n && !done; ++b) {
    if (b > best_value) break;
    int rate = (r == Rule::H) ? b - kappa : b;
    PtValue ptlb = PtValue::inf();
    if (b == n) ptlb = PtValue::of(0);
    else if (rate > 0) ptlb = PtValue::of((n - b + rate - 1) / rate);
    if (ptlb.is_inf()) continue;
    int floor_value = b + ptlb.value();
    if (floor_value > best_value) continue;
    if (best.size > 0 && floor_value == best_value) continue;

    for_each_subset_lex(n, b, [&](VertexSet mask) {
      int budget = best_value - b - (best.size > 0 ? 1 : 0);
      if (budget < 0) return false;
      PtValue pt;
      RoundSchedule sched;
      if (r == Rule::Z) {
        PropagationResult res = z_closure(g, mask);
        if (res.pt.is_inf() || res.pt.value() > budget) return true;
        pt = res.pt;
        sched = std::move(res.schedule);
      } else {
        int res = searcher->solve({mask, 0}, budget);
        if (res == PtSearcher::kTooDeep) return true;
        pt = PtValue::of(res);
        sched = searcher->extract(mask, res);
      }
      int value = b + pt.value();
      if (best.size == 0 || value < best_value) {
        best_value = value;
        best = {mask, std::move(sched), b, pt, PtValue::of(value)};
        if (value == lower) {
          done = true;
          return false;
        }
      }
      return true;
    });
  }
  if (best.size == 0)
    throw std::logic_error("throttling_number: no certificate found");
  return best;
}

PtValue pt_of_size(const Graph& g, int k, Rule r, const SearchLimits& limits) {
  if (k < 0 || k > g.n)
    throw std::invalid_argument("pt_of_size: k out of range [0, n]");
  if (k == 0) return PtValue::inf();
  if (k == g.n) return PtValue::of(0);
  PtValue best = PtValue::inf();
  std::optional<PtSearcher> searcher;
  if (r != Rule::Z) searcher.emplace(g, r, limits);
  for_each_subset_lex(g.n, k, [&](VertexSet mask) {
    int cap = g.n - k;
    int budget = best.is_inf() ? cap : std::min(cap, best.value() - 1);
    if (budget < 0) return false;
    if (r == Rule::Z) {
      PropagationResult res = z_closure(g, mask);
      if (!res.pt.is_inf() && res.pt.value() <= budget) best = res.pt;
    } else {
      int res = searcher->solve({mask, 0}, budget);
      if (res != PtSearcher::kTooDeep) best = PtValue::of(res);
    }
    return !(best == PtValue::of(0));
  });
  return best;
}

std::optional<int> k_of_pt(const Graph& g, int p, Rule r,
                           const SearchLimits& limits) {
  if (p < 0) throw std::invalid_argument("k_of_pt: p must be nonnegative");
  std::optional<PtSearcher> searcher;
  if (r != Rule::Z) searcher.emplace(g, r, limits);
  for (int k = 1; k <= g.n; ++k) {
    bool hit = !for_each_subset_lex(g.n, k, [&](VertexSet mask) {
      PtValue pt;
      if (r == Rule::Z) {
        pt = z_closure(g, mask).pt;
        if (!pt.is_inf() && pt.value() > p) pt = PtValue::inf();
      } else {
        int res = searcher->solve({mask, 0}, p);
        pt = res == PtSearcher::kTooDeep ? PtValue::inf() : PtValue::of(res);
      }
      return !(pt == PtValue::of(p));
    });
    if (hit) return k;
  }
  return std::nullopt;
}

ProductCertificate product_throttling(const Graph& g, ProductVariant variant,
                                      Rule r, const SearchLimits& limits) {
  int x = forcing_number(g, r, limits).value;
  int hi = variant == ProductVariant::InitialCost ? g.n : g.n - 1;
  ProductCertificate best;
  best.initial_cost = variant == ProductVariant::InitialCost;
  for (int k = x; k <= hi; ++k) {
    PtValue ptk = pt_of_size(g, k, r, limits);
    if (ptk.is_inf()) continue;  // cannot happen for k >= X(G); defensive-free skip
    long long value = best.initial_cost
                          ? static_cast<long long>(k) * (1 + ptk.value())
                          : static_cast<long long>(k) * ptk.value();
    if (best.value.is_inf() || value < best.value.value()) {
      best.k = k;
      best.pt_k = ptk;
      best.value = PtValue::of(static_cast<int>(value));
    }
  }
  if (r == Rule::H) {
    // Consistency: initial-cost product throttling is always n, and the
    // no-cost value equals the least size of a pt-1 set when finite.
    if (best.initial_cost && !(best.value == PtValue::of(g.n)))
      throw std::logic_error("product throttling: initial-cost value != n");
    if (!best.initial_cost && !best.value.is_inf()) {
      std::optional<int> k1 = k_of_pt(g, 1, r, limits);
      if (!k1 || *k1 != best.value.value())
        throw std::logic_error("product throttling: no-cost value != k(G,1)");
    }
  }
  return best;
}

// ------------------------------------------------------------ certificates

bool certificate_valid(const Graph& g, const ThrottleCertificate& cert, Rule r) {
  if (cert.size != popcount(cert.base)) return false;
  if (!(cert.th == cert.pt + cert.size)) return false;
  if (cert.pt.is_inf()) return true;
  if (cert.schedule.base != cert.base) return false;
  if (cert.schedule.pt() != cert.pt.value()) return false;
  ForceSet fs{cert.base, cert.schedule.flatten()};
  try {
    validate_force_set(g, fs);
  } catch (const std::invalid_argument&) {
    return false;
  }
  ForcingState s{cert.base, 0};
  for (const auto& round : cert.schedule.rounds) {
    if (round.empty()) return false;  // idle rounds cannot reduce pt
    for (const Force& f : round)
      if (!force_valid(g, s, f, r)) return false;
    ForcingState next = s;
    for (const Force& f : round) {
      next.blue |= bit(f.dst);
      next.extinct |= bit(f.src);
    }
    s = next;
  }
  return s.blue == full_set(g.n);
}

nlohmann::json ThrottleCertificate::to_json(Rule r) const {
  nlohmann::json j = schedule_to_json(schedule, r);
  j["size"] = size;
  j["th"] = th.is_inf() ? nlohmann::json("inf") : nlohmann::json(th.value());
  if (pt.is_inf()) j["pt"] = "inf";
  return j;
}

}  // namespace hopforce
