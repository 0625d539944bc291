#include <doctest.h>

#include <bit>
#include <cstdlib>
#include <random>

#include "daisy/binomial.hpp"
#include "daisy/constraint_system.hpp"
#include "daisy/errors.hpp"
#include "daisy/solver.hpp"
#include "oracles.hpp"

using namespace daisy;

namespace {

ConstraintSystem cube_edges(unsigned n) {
  std::vector<std::vector<Item>> edges;
  for (Item v = 0; v < (1u << n); ++v)
    for (unsigned b = 0; b < n; ++b)
      if (!(v >> b & 1u)) edges.push_back({v, v | (1u << b)});
  return ConstraintSystem(1u << n, edges);
}

}  // namespace

TEST_CASE("constraint system validation") {
  CHECK_THROWS_AS(ConstraintSystem(3, {{}}), InvalidInput);
  CHECK_THROWS_AS(ConstraintSystem(3, {{0, 3}}), InvalidInput);
  CHECK_THROWS_AS(ConstraintSystem(3, {{1, 1}}), InvalidInput);
  ConstraintSystem cs(3, {{2, 0}});
  CHECK(cs.constraints().front() == std::vector<Item>{0, 2});
  CHECK_THROWS_AS(cs.set_item_orbits({{0, 1}, {1, 2}}), InvalidInput);
  CHECK(avoids_all(cs, std::vector<Item>{0, 1}));
  CHECK_FALSE(avoids_all(cs, std::vector<Item>{0, 2}));
  CHECK(hits_all(cs, std::vector<Item>{2}));
}

TEST_CASE("daisy constraint systems") {
  const auto cs = build_daisy_constraints(6, DaisyPattern::plain(3));
  CHECK(cs.item_count() == 20);
  CHECK(cs.constraints().size() == 30);
  for (const auto& c : cs.constraints()) CHECK(c.size() == 6);
  CHECK(cs.labels().size() == 20);
  CHECK(build_daisy_constraints(7, DaisyPattern::plain(3)).constraints().size() == 105);
}

TEST_CASE("small golden optima") {
  CHECK(solve_max_avoiding(cube_edges(3)).objective == 4);
  CHECK(solve_min_transversal(cube_edges(3)).objective == 4);
  // K4-free graphs: Turán numbers.
  CHECK(solve_max_avoiding(build_daisy_constraints(4, DaisyPattern::plain(2))).objective == 5);
  CHECK(solve_max_avoiding(build_daisy_constraints(6, DaisyPattern::plain(2))).objective == 12);
  CHECK(solve_max_avoiding(ConstraintSystem(5, {})).objective == 5);
  CHECK(solve_max_avoiding(ConstraintSystem(0, {})).objective == 0);
  CHECK(solve_max_avoiding(ConstraintSystem(2, {{0}, {1}})).objective == 0);
}

TEST_CASE("solver matches brute force on random systems") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned m = 1 + trial % 20;
    const unsigned k = trial % 40;
    const auto cons = oracle::random_constraints(rng, m, k, 1 + trial % 6);
    const ConstraintSystem cs(m, cons);
    const auto exact = solve_max_avoiding(cs);
    CHECK(exact.status == SearchStatus::exact);
    CHECK(exact.objective == oracle::max_avoiding(m, cons));
    CHECK(exact.objective == brute_force_oracle(cs).objective);
    CHECK(exact.witness.size() == exact.objective);
    CHECK(avoids_all(cs, exact.witness));
    const auto hit = solve_min_transversal(cs);
    CHECK(hit.objective + exact.objective == m);
    CHECK(hits_all(cs, hit.witness));
  }
}

TEST_CASE("oracle on the 20-item daisy system") {
  const auto cs = build_daisy_constraints(6, DaisyPattern::plain(3));
  CHECK(brute_force_oracle(cs).objective == 16);
  CHECK(solve_max_avoiding(cs).objective == 16);
  CHECK_THROWS_AS(brute_force_oracle(ConstraintSystem(25, {})), ResourceRefusal);
}

TEST_CASE("packing bound never undercuts the best completion") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned m = 2 + trial % 9;
    const auto cons = oracle::random_constraints(rng, m, 1 + trial % 12, 1 + trial % 4);
    const ConstraintSystem cs(m, cons);
    std::vector<ItemState> state(m);
    std::uint64_t in = 0, out = 0;
    for (unsigned i = 0; i < m; ++i) {
      state[i] = static_cast<ItemState>(pick(rng));
      if (state[i] == ItemState::included) in |= std::uint64_t{1} << i;
      if (state[i] == ItemState::excluded) out |= std::uint64_t{1} << i;
    }
    const auto bound = packing_upper_bound(cs, state);
    CHECK(bound >= oracle::max_avoiding(m, cons, in, out));
    CHECK(bound <= static_cast<std::uint64_t>(m - std::popcount(out)));
  }
}

TEST_CASE("results do not depend on worker count or symmetry") {
  const auto cs = build_daisy_constraints(7, DaisyPattern::plain(3));
  const auto base = solve_max_avoiding(cs);
  CHECK(base.objective == 28);
  for (unsigned workers : {1u, 2u, 4u})
    for (bool sym : {false, true})
      for (int rep = 0; rep < 2; ++rep) {
        const auto r = solve_max_avoiding(cs, SolverConfig{.workers = workers, .symmetry = sym});
        CHECK(r.objective == base.objective);
        CHECK(r.status == SearchStatus::exact);
        if (!sym) CHECK(r.witness == base.witness);
        CHECK(avoids_all(cs, r.witness));
      }
}

TEST_CASE("relabeling items preserves the optimum") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned m = 8 + trial % 10;
    auto cons = oracle::random_constraints(rng, m, 15, 4);
    std::vector<Item> perm(m);
    for (unsigned i = 0; i < m; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    auto moved = cons;
    for (auto& c : moved)
      for (auto& i : c) i = perm[i];
    CHECK(solve_max_avoiding(ConstraintSystem(m, cons)).objective ==
          solve_max_avoiding(ConstraintSystem(m, moved)).objective);
  }
}

TEST_CASE("node limit degrades to a valid lower bound") {
  const auto cs = build_daisy_constraints(7, DaisyPattern::plain(3));
  const auto r = solve_max_avoiding(cs, SolverConfig{.node_limit = 5});
  CHECK(r.status == SearchStatus::lower_bound_only);
  CHECK(r.objective <= 28);
  CHECK(r.objective == r.witness.size());
  CHECK(avoids_all(cs, r.witness));
  const auto t = solve_min_transversal(cs, SolverConfig{.node_limit = 5});
  CHECK(t.status == SearchStatus::lower_bound_only);
  CHECK(hits_all(cs, t.witness));
}

TEST_CASE("node limit from the environment") {
  ::setenv("DAISY_NODE_LIMIT", "77", 1);
  CHECK(SolverConfig::from_environment().node_limit == 77);
  ::setenv("DAISY_NODE_LIMIT", "-3", 1);
  CHECK_THROWS_AS(SolverConfig::from_environment(), InvalidInput);
  ::unsetenv("DAISY_NODE_LIMIT");
  CHECK(SolverConfig::from_environment().node_limit == SolverConfig{}.node_limit);
}
