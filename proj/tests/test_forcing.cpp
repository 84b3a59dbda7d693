#include <doctest.h>

#include <algorithm>

#include "hopforce/bounds.hpp"
#include "test_helpers.hpp"

using namespace hopforce;
using hopforce::testing::random_graph;
using hopforce::testing::random_hop_force_set;

TEST_CASE("vertex status under the three rules") {
  Graph p4 = path_graph(4);
  ForcingState s{bit(0) | bit(1), 0};
  CHECK(vertex_status(p4, s, 0, Rule::H) == VertexStatus::Active);
  CHECK(vertex_status(p4, s, 1, Rule::H) == VertexStatus::Dormant);
  CHECK(vertex_status(p4, s, 2, Rule::H) == VertexStatus::White);
  CHECK(vertex_status(p4, s, 1, Rule::Z) == VertexStatus::Active);
  CHECK(vertex_status(p4, s, 0, Rule::Z) == VertexStatus::Dormant);
  CHECK(vertex_status(p4, s, 0, Rule::FloorZ) == VertexStatus::Active);

  // K_n with one white vertex: every blue vertex is dormant under H
  Graph k5 = complete_graph(5);
  ForcingState t{full_set(5) & ~bit(3), 0};
  for (int v : {0, 1, 2, 4})
    CHECK(vertex_status(k5, t, v, Rule::H) == VertexStatus::Dormant);

  // extinct beats everything
  ForcingState e{bit(0) | bit(1), bit(0)};
  CHECK(vertex_status(p4, e, 0, Rule::H) == VertexStatus::Extinct);
  CHECK(vertex_status(p4, e, 0, Rule::Z) == VertexStatus::Extinct);

  // hopping needs a white vertex to exist
  ForcingState done{full_set(4), 0};
  CHECK(vertex_status(p4, done, 0, Rule::H) == VertexStatus::Dormant);
}

TEST_CASE("valid force enumeration") {
  Graph e3 = empty_graph(3);
  ForcingState s{bit(0), 0};
  std::vector<Force> fs = valid_forces(e3, s, Rule::H);
  CHECK(fs == std::vector<Force>{{0, 1}, {0, 2}});

  Graph p4 = path_graph(4);
  ForcingState t{bit(0) | bit(1), 0};
  CHECK(valid_forces(p4, t, Rule::H) == std::vector<Force>{{0, 2}, {0, 3}});
  CHECK(valid_forces(p4, t, Rule::Z) == std::vector<Force>{{1, 2}});
  std::vector<Force> fz = valid_forces(p4, t, Rule::FloorZ);
  CHECK(fz.size() == 3);
  for (Force f : {Force{0, 2}, Force{0, 3}, Force{1, 2}})
    CHECK(std::find(fz.begin(), fz.end(), f) != fz.end());
}

TEST_CASE("apply force") {
  Graph e2 = empty_graph(2);
  ForcingState s{bit(0), 0};
  ForcingState r = apply_force(e2, s, {0, 1}, Rule::H);
  CHECK(r.blue == full_set(2));
  CHECK(r.extinct == bit(0));
  CHECK(valid_forces(e2, r, Rule::H).empty());

  Graph p4 = path_graph(4);
  ForcingState t = apply_force(p4, {bit(0) | bit(1), 0}, {0, 2}, Rule::H);
  CHECK(vertex_status(p4, t, 1, Rule::H) == VertexStatus::Active);
  CHECK_THROWS_AS(apply_force(p4, {bit(0) | bit(1), 0}, {1, 3}, Rule::H),
                  std::invalid_argument);
}

TEST_CASE("chronological execution") {
  Graph p4 = path_graph(4);
  ForcingState fin =
      execute_chronological(p4, bit(0) | bit(1), {{0, 2}, {1, 3}}, Rule::H);
  CHECK(fin.blue == full_set(4));

  CHECK(execute_chronological(p4, bit(0) | bit(1), {}, Rule::H).blue ==
        (bit(0) | bit(1)));

  try {
    execute_chronological(p4, bit(0) | bit(1), {{1, 3}}, Rule::H);
    CHECK(false);
  } catch (const ChronologyError& e) {
    CHECK(e.index == 0);
  }
}

TEST_CASE("round decomposition") {
  Graph p4 = path_graph(4);
  ForceSet fs{bit(0) | bit(1), {{0, 2}, {1, 3}}};
  RoundSchedule sched = round_decompose(p4, fs, Rule::H);
  CHECK(sched.pt() == 2);
  CHECK(sched.colored_in_round(1) == bit(2));
  CHECK(sched.colored_in_round(2) == bit(3));
  CHECK(sched.blue_after(2) == full_set(4));

  // base = V, no forces: single round zero... pt = 0
  RoundSchedule trivial = round_decompose(p4, {full_set(4), {}}, Rule::H);
  CHECK(trivial.pt() == 0);
  CHECK(trivial.blue_after(0) == full_set(4));

  // non-linearizable force set
  ForceSet bad{bit(0), {{3, 1}}};
  CHECK_THROWS_AS(round_decompose(p4, bad, Rule::H), std::invalid_argument);

  // force-set invariants
  CHECK_THROWS_AS(validate_force_set(p4, ForceSet{bit(0), {{0, 1}, {0, 2}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_force_set(p4, ForceSet{bit(0), {{0, 1}, {2, 1}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_force_set(p4, ForceSet{bit(0) | bit(1), {{0, 1}}}),
                  std::invalid_argument);
}

TEST_CASE("snaking schedule on C_16 decomposes into 4 rounds of (3,3,3,2)") {
  // base = 5 leftmost vertices; one column per round, consistent with
  // th_H(C_16) = ceil(2*sqrt(14)+1) = 9 = 5 + 4.
  ThrottleCertificate cert = build_snaking_witness("cycle", 16);
  CHECK(cert.size == 5);
  CHECK(cert.pt == PtValue::of(4));
  CHECK(cert.th == PtValue::of(9));
  std::vector<std::size_t> sizes;
  for (const auto& round : cert.schedule.rounds) sizes.push_back(round.size());
  CHECK(sizes == std::vector<std::size_t>{3, 3, 3, 2});

  // any within-round order is a valid chronological list
  ForceSet flat{cert.base, cert.schedule.flatten()};
  RoundSchedule again = round_decompose(cycle_graph(16), flat, Rule::H);
  CHECK(again.pt() == 4);
}

TEST_CASE("terminus and reversal") {
  Graph p4 = path_graph(4);
  ForceSet fs{bit(0) | bit(1), {{0, 2}, {1, 3}}};
  CHECK(terminus(p4, fs) == (bit(2) | bit(3)));
  ForceSet rev = reverse_forces(p4, fs);
  CHECK(rev.base == (bit(2) | bit(3)));
  CHECK(rev.forces == std::vector<Force>{{2, 0}, {3, 1}});

  CHECK(terminus(p4, {full_set(4), {}}) == full_set(4));
  CHECK(reverse_forces(p4, {full_set(4), {}}).forces.empty());

  ForceSet incomplete{bit(0) | bit(1), {{0, 2}}};
  CHECK_THROWS_AS(terminus(p4, incomplete), std::invalid_argument);
}

TEST_CASE("augmentation") {
  Graph p4 = path_graph(4);
  ForceSet fs{bit(0) | bit(1), {{0, 2}, {1, 3}}};
  Graph aug = augment(p4, fs);
  CHECK(aug.has_edge(0, 2));
  CHECK(aug.has_edge(1, 3));
  CHECK(is_forcing_set(aug, fs.base, Rule::Z).forcing);

  CHECK(augment(p4, {bit(0), {}}) == p4);

  Graph e3 = empty_graph(3);
  ForceSet chain{bit(0), {{0, 1}, {1, 2}}};
  Graph p3 = augment(e3, chain);
  CHECK(canonical_g6(p3) == canonical_g6(path_graph(3)));
  CHECK(is_forcing_set(p3, bit(0), Rule::Z).forcing);

  CHECK_THROWS_AS(augment(p4, ForceSet{bit(0) | bit(1), {{1, 0}}}),
                  std::invalid_argument);
}

TEST_CASE("any within-round order of a schedule executes chronologically") {
  std::mt19937 rng(515);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, 5 + trial % 3, 0.35);
    ForceSet fs = random_hop_force_set(g, rng);
    RoundSchedule sched = round_decompose(g, fs, Rule::H);
    std::vector<Force> reversed_rounds;
    for (const auto& round : sched.rounds)
      for (auto it = round.rbegin(); it != round.rend(); ++it)
        reversed_rounds.push_back(*it);
    ForcingState fin = execute_chronological(g, fs.base, reversed_rounds, Rule::H);
    CHECK(fin.blue == full_set(g.n));
  }
}

TEST_CASE("reversal closure and round containment on random instances") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 4 + trial % 4;
    Graph g = random_graph(rng, n, 0.3);
    ForceSet fs = random_hop_force_set(g, rng);
    RoundSchedule fwd = round_decompose(g, fs, Rule::H);
    REQUIRE(fwd.blue_after(fwd.pt()) == full_set(n));

    ForceSet rev = reverse_forces(g, fs);
    RoundSchedule back = round_decompose(g, rev, Rule::H);
    CHECK(back.blue_after(back.pt()) == full_set(n));

    int t = fwd.pt();
    for (int i = 0; i <= t; ++i) {
      VertexSet fwd_round = i == t ? fwd.base : fwd.colored_in_round(t - i);
      CHECK((fwd_round & ~back.blue_after(i)) == 0);
    }

    // Z on the augmented graph reproduces the H round structure exactly.
    Graph aug = augment(g, fs);
    RoundSchedule on_aug = round_decompose(aug, fs, Rule::Z);
    REQUIRE(on_aug.pt() == fwd.pt());
    for (int i = 1; i <= t; ++i)
      CHECK(on_aug.colored_in_round(i) == fwd.colored_in_round(i));
  }
}

TEST_CASE("certificate JSON shape") {
  Graph p4 = path_graph(4);
  RoundSchedule sched = round_decompose(p4, {bit(0) | bit(1), {{0, 2}, {1, 3}}}, Rule::H);
  nlohmann::json j = schedule_to_json(sched, Rule::H);
  CHECK(j["base"] == nlohmann::json({0, 1}));
  CHECK(j["pt"] == 2);
  CHECK(j["rule"] == "H");
  CHECK(j["forces"].size() == 2);
  CHECK(j["forces"][0]["round"] == 1);
}
