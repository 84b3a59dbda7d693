#include "hopforce/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "hopforce/bounds.hpp"
#include "hopforce/extremal.hpp"
#include "hopforce/solvers.hpp"

namespace hopforce {

// ------------------------------------------------------------------ naive

namespace naive {

namespace {

bool reach_dfs(const Graph& g, ForcingState s, Rule r) {
  if (s.blue == full_set(g.n)) return true;
  for (const Force& f : valid_forces(g, s, r)) {
    ForcingState next{s.blue | bit(f.dst), s.extinct | bit(f.src)};
    if (reach_dfs(g, next, r)) return true;
  }
  return false;
}

// every nonempty sub-collection of currently valid forces with distinct
// sources and distinct targets forms one candidate round
void round_moves(const std::vector<Force>& cand, std::size_t idx, VertexSet srcs,
                 VertexSet dsts, const std::function<void(VertexSet, VertexSet)>& emit) {
  if (idx == cand.size()) {
    if (dsts) emit(srcs, dsts);
    return;
  }
  round_moves(cand, idx + 1, srcs, dsts, emit);
  const Force& f = cand[idx];
  if (!(srcs & bit(f.src)) && !(dsts & bit(f.dst)))
    round_moves(cand, idx + 1, srcs | bit(f.src), dsts | bit(f.dst), emit);
}

int pt_dfs(const Graph& g, ForcingState s, Rule r) {
  if (s.blue == full_set(g.n)) return 0;
  std::vector<Force> cand = valid_forces(g, s, r);
  int best = -1;
  round_moves(cand, 0, 0, 0, [&](VertexSet srcs, VertexSet dsts) {
    int sub = pt_dfs(g, {s.blue | dsts, s.extinct | srcs}, r);
    if (sub >= 0 && (best < 0 || sub + 1 < best)) best = sub + 1;
  });
  return best;
}

}  // namespace

bool is_forcing_set(const Graph& g, VertexSet base, Rule r) {
  return reach_dfs(g, {base, 0}, r);
}

int forcing_number(const Graph& g, Rule r) {
  for (int k = 1; k <= g.n; ++k) {
    int found = -1;
    for_each_subset_lex(g.n, k, [&](VertexSet mask) {
      if (reach_dfs(g, {mask, 0}, r)) {
        found = k;
        return false;
      }
      return true;
    });
    if (found > 0) return found;
  }
  return g.n;
}

int pt(const Graph& g, VertexSet base, Rule r) {
  return pt_dfs(g, {base & full_set(g.n), 0}, r);
}

int throttling(const Graph& g, Rule r) {
  int best = g.n;  // B = V(G)
  for (VertexSet mask = 1; mask < full_set(g.n); ++mask) {
    if (popcount(mask) >= best) continue;
    int p = pt(g, mask, r);
    if (p >= 0) best = std::min(best, popcount(mask) + p);
  }
  return best;
}

}  // namespace naive

// ------------------------------------------------------------- the suite

namespace {

struct Check {
  std::ostringstream log;
  int failures = 0;
  int subchecks = 0;

  template <class A, class B>
  void eq(const A& got, const B& want, const std::string& what) {
    ++subchecks;
    if (!(got == want)) {
      ++failures;
      if (failures <= 8)
        log << "  MISMATCH " << what << ": got " << got << ", want " << want << "\n";
    }
  }
  void truth(bool ok, const std::string& what) {
    ++subchecks;
    if (!ok) {
      ++failures;
      if (failures <= 8) log << "  FAIL " << what << "\n";
    }
  }

  CheckResult finish(const std::string& id, double seconds) {
    std::ostringstream detail;
    detail << subchecks << " sub-checks";
    if (failures) detail << ", " << failures << " failures";
    std::string extra = log.str();
    if (!extra.empty()) detail << "\n" << extra;
    return {id, failures == 0, detail.str(), seconds};
  }
};

int th_value(const Graph& g, Rule r) {
  return throttling_number(g, r).th.value();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}

// Grows a random subset into a hopping forcing set, then records one random
// chronological list to completion. Hopping runs can dead-end even from a
// forcing set, so restart until one walk completes.
ForceSet random_hop_force_set(const Graph& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, g.n - 1);
  VertexSet base = 0;
  int want = 1 + pick(rng) % g.n;
  while (popcount(base) < want) base |= bit(pick(rng));
  while (!is_forcing_set(g, base, Rule::H).forcing) base |= bit(pick(rng));
  for (int attempt = 0; attempt < 64; ++attempt) {
    ForceSet fs;
    fs.base = base;
    ForcingState s{base, 0};
    while (s.blue != full_set(g.n)) {
      std::vector<Force> options = valid_forces(g, s, Rule::H);
      if (options.empty()) break;
      const Force& f = options[pick(rng) % options.size()];
      fs.forces.push_back(f);
      s = {s.blue | bit(f.dst), s.extinct | bit(f.src)};
    }
    if (s.blue == full_set(g.n)) return fs;
  }
  return {base, is_forcing_set(g, base, Rule::H).chronology};
}

// ---- check 1: forcing-number table ----
CheckResult c1(const SuiteOptions&) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  for (int n = 2; n <= 10; ++n)
    c.eq(forcing_number(path_graph(n), Rule::H).value, 2, "H(P_" + std::to_string(n) + ")");
  for (int n = 3; n <= 10; ++n)
    c.eq(forcing_number(cycle_graph(n), Rule::H).value, 3, "H(C_" + std::to_string(n) + ")");
  for (int n = 4; n <= 9; ++n)
    c.eq(forcing_number(wheel_graph(n), Rule::H).value, 4, "H(W_" + std::to_string(n) + ")");
  for (int n = 2; n <= 9; ++n)
    c.eq(forcing_number(star_graph(n), Rule::H).value, 2, "H(K_{1," + std::to_string(n - 1) + "})");
  for (int n = 1; n <= 8; ++n)
    c.eq(forcing_number(complete_graph(n), Rule::H).value, n, "H(K_" + std::to_string(n) + ")");
  for (int n = 1; n <= 10; ++n)
    c.eq(forcing_number(empty_graph(n), Rule::H).value, 1, "H(empty_" + std::to_string(n) + ")");
  for (int s = 1; s <= 5; ++s)
    for (int t = s; t <= 5; ++t) {
      Graph g = complete_bipartite(s, t);
      c.eq(forcing_number(g, Rule::H).value, s + 1,
           "H(K_{" + std::to_string(s) + "," + std::to_string(t) + "})");
      if (t >= 2)  // Z = s+t-2 needs t >= 2: Z(K_{1,1}) = Z(K_2) = 1
        c.eq(forcing_number(g, Rule::Z).value, s + t - 2,
             "Z(K_{" + std::to_string(s) + "," + std::to_string(t) + "})");
    }
  c.eq(forcing_number(petersen_graph(), Rule::H).value, 6, "H(Petersen)");
  c.eq(forcing_number(petersen_graph(), Rule::Z).value, 5, "Z(Petersen)");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c.finish("1.forcing-table", secs);
}

// ---- check 2: sandwich suite over every small isomorphism class ----
CheckResult c2(const SuiteOptions&) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  int classes = 0;
  auto check_graph = [&](const Graph& g) {
    int h = forcing_number(g, Rule::H).value;
    int z = forcing_number(g, Rule::Z).value;
    int fz = forcing_number(g, Rule::FloorZ).value;
    int delta = min_degree(g);
    c.truth(fz <= h && h <= z + 1,
            "sandwich floorZ<=H<=Z+1 on " + write_graph6(g));
    c.truth(delta + 1 <= h && h <= g.n, "delta+1 <= H <= n on " + write_graph6(g));
    c.eq(h == g.n, g.edge_count() == g.n * (g.n - 1) / 2,
         "H=n iff complete on " + write_graph6(g));
    c.eq(h == 1, g.edge_count() == 0, "H=1 iff edgeless on " + write_graph6(g));
    if (z == delta)
      c.eq(h, delta + 1, "Z=delta => H=delta+1 on " + write_graph6(g));
  };
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : all_graphs(n)) {
      ++classes;
      check_graph(g);
    }
  std::mt19937 rng(1618033988);
  const double probs[] = {0.2, 0.4, 0.6, 0.8};
  for (int i = 0; i < 200; ++i)
    check_graph(random_graph(rng, 7 + i % 2, probs[i % 4]));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CheckResult r = c.finish("2.sandwich", secs);
  r.detail += " (" + std::to_string(classes) + " classes n <= 7, plus 200 random n in {7,8})";
  return r;
}

// ---- check 3: throttling table ----
CheckResult c3(const SuiteOptions&) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  auto checked_th = [&](const Graph& g, Rule r, const std::string& what) {
    ThrottleCertificate cert = throttling_number(g, r);
    c.truth(certificate_valid(g, cert, r), what + " certificate validates");
    return cert.th.value();
  };
  for (int n = 1; n <= 16; ++n)
    c.eq(checked_th(empty_graph(n), Rule::H, "empty_" + std::to_string(n)),
         static_cast<int>(ceil_two_sqrt(n)) - 1, "th_H(empty_" + std::to_string(n) + ")");
  for (int n = 2; n <= 14; ++n)
    c.eq(checked_th(path_graph(n), Rule::H, "P_" + std::to_string(n)),
         static_cast<int>(ceil_two_sqrt(n - 1)), "th_H(P_" + std::to_string(n) + ")");
  for (int n = 3; n <= 14; ++n)
    c.eq(checked_th(cycle_graph(n), Rule::H, "C_" + std::to_string(n)),
         static_cast<int>(ceil_two_sqrt(n - 2)) + 1, "th_H(C_" + std::to_string(n) + ")");
  for (int s = 1; s <= 6; ++s)
    for (int t = s; t <= 6; ++t)
      c.eq(checked_th(complete_bipartite(s, t), Rule::H,
                      "K_{" + std::to_string(s) + "," + std::to_string(t) + "}"),
           static_cast<int>(ceil_two_sqrt(t)) + s - 1,
           "th_H(K_{" + std::to_string(s) + "," + std::to_string(t) + "})");
  c.eq(checked_th(petersen_graph(), Rule::H, "Petersen/H"), 8, "th_H(Petersen)");
  c.eq(checked_th(petersen_graph(), Rule::Z, "Petersen/Z"), 6, "th_Z(Petersen)");
  c.eq(checked_th(cross_graph(), Rule::H, "cross"), 5, "th_H(cross)");
  for (int s = 1; s <= 6; ++s) {
    Graph g = cartesian_product(complete_graph(s), path_graph(2));
    c.eq(checked_th(g, Rule::H, "KsP2/H"), static_cast<int>(ceil_two_sqrt(s)) + s - 1,
         "th_H(K_" + std::to_string(s) + " x P_2)");
    c.eq(checked_th(g, Rule::Z, "KsP2/Z"), s + 1,
         "th_Z(K_" + std::to_string(s) + " x P_2)");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c.finish("3.throttle-table", secs);
}

// ---- check 4: bound sandwich ----
CheckResult c4(const SuiteOptions&) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  auto check_graph = [&](const Graph& g) {
    int exact = th_value(g, Rule::H);
    try {
      BoundReport rep = verify_bounds(g, exact);
      c.truth(rep.lower_kappa <= exact && exact <= rep.upper_alpha,
              "sandwich on " + write_graph6(g));
    } catch (const std::logic_error& e) {
      c.truth(false, std::string("verify_bounds threw: ") + e.what());
    }
  };
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) check_graph(g);
  std::mt19937 rng(20240817);
  const double probs[] = {0.3, 0.5, 0.7};
  for (int i = 0; i < 200; ++i)
    check_graph(random_graph(rng, 7 + i % 2, probs[i % 3]));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c.finish("4.bound-sandwich", secs);
}

// ---- check 5: strict-gap instances ----
CheckResult c5(const SuiteOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  const std::pair<int, int> cases[] = {{0, 4}, {1, 5}, {2, 8}};
  for (auto [s, t] : cases) {
    Graph g = kst_augmented(s, t);
    int lower = lower_bound_kappa(g.n, vertex_connectivity(g));
    int exact = th_value(g, Rule::H);
    c.truth(exact > lower, "th_H(K(" + std::to_string(s) + "," + std::to_string(t) +
                               ")) = " + std::to_string(exact) + " > " +
                               std::to_string(lower));
  }
  // S(3,4,5): the restricted engine and the generic solver must agree on
  // whether the kappa bound is achievable (n = 13, T = ceil(2*sqrt(12)) = 7).
  {
    Graph sp = spider_graph(3, 4, 5);
    int lower = lower_bound_kappa(13, 1);
    bool restricted = false;
    for (int k : {4, 5})  // k + (7-k)(k-1) == 13 exactly for both
      if (one_dormant_search(spider_tree(3, 4, 5), k, lower - k, opts.jobs).achievable)
        restricted = true;
    int exact = th_value(sp, Rule::H);
    c.eq(restricted, exact == lower, "restricted vs generic on S(3,4,5)");
  }
  // Path sanity: the same machinery must find the snaking schedule on P_37.
  c.truth(one_dormant_search(path_tree(37), 7, 5, opts.jobs).achievable,
          "one-dormant search achieves ceil(2*sqrt(36)) = 12 on P_37");
  // The strict-gap instance: S(11,12,13), n = 37; no base achieves th = 12.
  {
    SpiderVerdict v = spider_strict_gap(2, opts.jobs);
    c.truth(!v.achievable, "th_H(S(11,12,13)) >= 13 (restricted search exhausted, " +
                               std::to_string(v.search.bases_admissible) +
                               " admissible bases)");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c.finish("5.strict-gaps-spider", secs);
}

// ---- check 6: extremal counts ----
CheckResult c6(const SuiteOptions&) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  auto canon = [](const Graph& g) { return canonical_g6(g); };
  c.eq(join(atlas_th_exact(1)), canon(Graph(1)), "atlas th=1");
  {
    std::vector<std::string> want = {canon(complete_graph(2)), canon(empty_graph(2))};
    std::sort(want.begin(), want.end());
    c.eq(join(atlas_th_exact(2)), join(want), "atlas th=2");
  }
  std::vector<std::string> t3 = atlas_th_exact(3);
  c.eq(static_cast<int>(t3.size()), 7, "atlas th=3 count");
  std::vector<std::string> t4 = atlas_th_exact(4);
  c.eq(static_cast<int>(t4.size()), 35, "atlas th=4 count");
  if (static_cast<int>(t3.size()) != 7) {
    c.log << "  th=3 witnesses:";
    for (const auto& s : t3) c.log << ' ' << s;
    c.log << "\n";
  }
  if (static_cast<int>(t4.size()) != 35) {
    c.log << "  th=4 witnesses:";
    for (const auto& s : t4) c.log << ' ' << s;
    c.log << "\n";
  }
  {
    Graph two_k2(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    Graph k2_e2(4);
    k2_e2.add_edge(0, 1);
    std::vector<std::string> want = {canon(two_k2), canon(k2_e2), canon(empty_graph(4))};
    std::sort(want.begin(), want.end());
    c.eq(join(generate_Gk(0)), join(want), "G_0 triple");
  }
  std::vector<std::string> g1 = generate_Gk(1);
  c.eq(static_cast<int>(g1.size()), 108, "|G_1|");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c.finish("6.extremal-counts", secs);
}

// ---- check 7: forbidden-subgraph equivalence ----
CheckResult c7(const SuiteOptions&) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) {
      int th = th_value(g, Rule::H);
      c.eq(classify_extreme_ge(g, 0), th == g.n, "triple-free <=> th=n on " + write_graph6(g));
      c.eq(classify_extreme_ge(g, 1), th >= g.n - 1,
           "G_1-free <=> th>=n-1 on " + write_graph6(g));
    }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c.finish("7.forbidden-equivalence", secs);
}

// ---- check 8: product throttling ----
CheckResult c8(const SuiteOptions&) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) {
      try {
        ProductCertificate x = product_throttling(g, ProductVariant::InitialCost);
        c.eq(x.value.str(), std::to_string(g.n), "th_x = n on " + write_graph6(g));
        if (is_connected(g)) {
          ProductCertificate star = product_throttling(g, ProductVariant::NoCost);
          std::optional<int> k1 = k_of_pt(g, 1, Rule::H);
          if (star.value.is_inf()) {
            c.truth(!k1.has_value(), "th* inf <=> no pt-1 set on " + write_graph6(g));
          } else {
            c.truth(k1 && *k1 == star.value.value(),
                    "th* = k_H(G,1) on " + write_graph6(g));
            int kappa = vertex_connectivity(g);
            c.truth(star.value.value() >= (g.n + kappa + 1) / 2,
                    "th* >= ceil((n+kappa)/2) on " + write_graph6(g));
          }
        }
      } catch (const std::logic_error& e) {
        c.truth(false, std::string("product self-check: ") + e.what());
      }
    }
  for (int n = 3; n <= 12; ++n)
    c.eq(product_throttling(path_graph(n), ProductVariant::NoCost).value.str(),
         std::to_string((n + 2) / 2), "th*(P_" + std::to_string(n) + ")");
  for (int n = 1; n <= 6; ++n)
    c.truth(product_throttling(complete_graph(n), ProductVariant::NoCost).value.is_inf(),
            "th*(K_" + std::to_string(n) + ") = inf");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c.finish("8.product-throttling", secs);
}

// ---- check 9: reversal and augmentation ----
CheckResult c9(const SuiteOptions&) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  std::mt19937 rng(577215664);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 4 + trial % 4;  // 4..7
    Graph g = random_graph(rng, n, 0.25 + 0.1 * (trial % 5));
    ForceSet fs = random_hop_force_set(g, rng);
    try {
      RoundSchedule fwd = round_decompose(g, fs, Rule::H);
      VertexSet term = terminus(g, fs);
      ForceSet rev = reverse_forces(g, fs);
      // Prop: the terminus is a hopping forcing set via the reversed forces.
      RoundSchedule back = round_decompose(g, rev, Rule::H);
      c.truth(back.blue_after(back.pt()) == full_set(g.n),
              "reversal colors V(G) on " + write_graph6(g));
      c.eq(rev.base, term, "reversal based at terminus");
      // F^(t-i) must land inside the terminus-side blue set after i rounds.
      int t = fwd.pt();
      bool contained = true;
      for (int i = 0; i <= t; ++i) {
        VertexSet fwd_round = i == t ? fwd.base : fwd.colored_in_round(t - i);
        if (fwd_round & ~back.blue_after(std::min(i, back.pt()))) contained = false;
      }
      c.truth(contained, "round containment on " + write_graph6(g));
      // Augmentation: base Z-forces the augmented graph with the same rounds.
      Graph aug = augment(g, fs);
      c.truth(is_forcing_set(aug, fs.base, Rule::Z).forcing,
              "base Z-forces augment(g, fs) on " + write_graph6(g));
      RoundSchedule aug_rounds = round_decompose(aug, fs, Rule::Z);
      bool same = aug_rounds.pt() == fwd.pt();
      for (int i = 1; same && i <= fwd.pt(); ++i)
        same = aug_rounds.colored_in_round(i) == fwd.colored_in_round(i);
      c.truth(same, "H rounds on g equal Z rounds on augment(g, fs)");
    } catch (const std::exception& e) {
      c.truth(false, std::string("reversal trial threw: ") + e.what());
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c.finish("9.reversal-augmentation", secs);
}

// ---- check 10: oracle equivalence ----
CheckResult c10(const SuiteOptions&) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  const Rule rules[] = {Rule::H, Rule::Z, Rule::FloorZ};
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n))
      for (Rule r : rules) {
        std::string tag = rule_name(r) + " on " + write_graph6(g);
        c.eq(forcing_number(g, r).value, naive::forcing_number(g, r),
             "forcing number " + tag);
        for (VertexSet mask = 0; mask <= full_set(g.n); ++mask) {
          PtValue fast = min_propagation_time(g, mask, r).pt;
          int slow = naive::pt(g, mask, r);
          c.truth(fast.is_inf() ? slow < 0 : fast.value() == slow,
                  "pt of subset " + std::to_string(mask) + " " + tag);
          if (mask == full_set(g.n)) break;
        }
        c.eq(th_value(g, r), naive::throttling(g, r), "throttling " + tag);
      }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c.finish("10.oracle-equivalence", secs);
}

}  // namespace

std::vector<CheckResult> run_paper_suite(const SuiteOptions& opts) {
  using Fn = CheckResult (*)(const SuiteOptions&);
  const std::pair<const char*, Fn> table[] = {
      {"1.forcing-table", c1},      {"2.sandwich", c2},
      {"3.throttle-table", c3},     {"4.bound-sandwich", c4},
      {"5.strict-gaps-spider", c5},        {"6.extremal-counts", c6},
      {"7.forbidden-equivalence", c7}, {"8.product-throttling", c8},
      {"9.reversal-augmentation", c9}, {"10.oracle-equivalence", c10},
  };
  std::vector<CheckResult> out;
  for (const auto& [id, fn] : table) {
    if (!opts.only.empty() && std::string(id).find(opts.only) == std::string::npos)
      continue;
    out.push_back(fn(opts));
  }
  if (opts.selftest_fail)
    out.push_back({"selftest-fail", false, "deliberately failing row"});
  return out;
}

}  // namespace hopforce
