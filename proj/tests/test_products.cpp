#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "daisy/binomial.hpp"
#include "daisy/constraint_system.hpp"
#include "daisy/daisy_model.hpp"
#include "daisy/density_record.hpp"
#include "daisy/errors.hpp"
#include "daisy/products.hpp"
#include "daisy/solver.hpp"

using namespace daisy;

namespace {

UniformHypergraph clique(unsigned s, unsigned r) { return {SetFamily::complete(s, r)}; }

UniformHypergraph abstract_daisy(const DaisyPattern& p) {
  const unsigned m = p.min_ground();
  const auto d = enumerate_daisies(m, p).front();
  return {SetFamily::from_sets(m, p.r, d.petals)};
}

using SetOfSets = std::set<std::vector<Item>>;

SetOfSets as_set(const ConstraintSystem& cs) { return {cs.constraints().begin(), cs.constraints().end()}; }

UniformHypergraph random_graph(std::mt19937_64& rng, unsigned m, unsigned r) {
  SetFamily f(m, r);
  for (Rank i = 0; i < f.universe(); ++i)
    if (rng() % 2) f.insert(i);
  return {f};
}

}  // namespace

TEST_CASE("star product basics") {
  const auto edge = clique(2, 2);
  const auto sq = star_product(edge, edge);
  CHECK(sq.ground() == 4);
  CHECK(sq.uniformity() == 4);
  CHECK(sq.edge_count() == 1);
}

TEST_CASE("product of two cliques") {
  for (unsigned s = 2; s <= 5; ++s)
    for (unsigned t = 2; t <= 5; ++t) {
      const auto p = star_product(clique(s, 2), clique(t, 2));
      SetFamily expect(s + t, 4);
      for_each_combination(s + t, 4, [&](std::span<const Element> a) {
        unsigned low = 0;
        for (auto e : a) low += e < s;
        if (low == 2) expect.insert(a);
        return true;
      });
      CHECK(p.edges == expect);
    }
}

TEST_CASE("product sizes multiply and grounds add") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_graph(rng, 3 + trial % 3, 1 + trial % 2);
    const auto g = random_graph(rng, 2 + trial % 4, 1 + trial % 3 % 2);
    const auto p = star_product(f, g);
    CHECK(p.edge_count() == f.edge_count() * g.edge_count());
    CHECK(p.ground() == f.ground() + g.ground());
    CHECK(p.uniformity() == f.uniformity() + g.uniformity());
    CHECK(star_product(star_product(f, g), f) == star_product(f, star_product(g, f)));
  }
}

TEST_CASE("powers") {
  const auto k = clique(4, 2);
  CHECK(power(k, 1) == k);
  CHECK(power(k, 2).edge_count() == binom(4, 2) * binom(4, 2));
  CHECK(power(k, 3) == star_product(star_product(k, k), k));
  CHECK(power(k, 3).uniformity() == 6);
  CHECK_THROWS_AS(power(k, 0), InvalidInput);
}

TEST_CASE("copy enumeration") {
  const auto single = enumerate_copies(clique(3, 3), 6);
  CHECK(single.item_count() == 20);
  CHECK(single.constraints().size() == 20);
  CHECK(solve_max_avoiding(single).objective == 0);
  const auto k4 = enumerate_copies(clique(4, 2), 5);
  CHECK(k4.constraints().size() == 5);
  for (const auto& c : k4.constraints()) CHECK(c.size() == 6);
  CHECK(std::is_sorted(k4.constraints().begin(), k4.constraints().end()));
  CHECK_THROWS_AS(enumerate_copies(clique(9, 2), 10), ResourceRefusal);
}

TEST_CASE("copy enumeration reproduces the daisy generator") {
  for (unsigned r = 1; r <= 5; ++r)
    for (unsigned s = 1; s <= 5; ++s)
      for (unsigned t = 1; t <= std::min(r, s); ++t) {
        const auto p = DaisyPattern::make(r, s, t);
        if (p.min_ground() > kMaxPatternVertices) continue;
        const unsigned n = std::min(p.min_ground() + 1, 8u);
        CAPTURE(r);
        CAPTURE(s);
        CAPTURE(t);
        CHECK(as_set(enumerate_copies(abstract_daisy(p), n)) == as_set(build_daisy_constraints(n, p)));
      }
  CHECK(as_set(enumerate_copies(abstract_daisy(DaisyPattern::plain(3)), 6)) ==
        as_set(build_daisy_constraints(6, DaisyPattern::plain(3))));
}

TEST_CASE("ex through copies is relabel-invariant and density-monotone") {
  const UniformHypergraph path{SetFamily::from_sets(4, 2, {{0, 1}, {1, 2}, {2, 3}})};
  const UniformHypergraph moved{SetFamily::from_sets(4, 2, {{0, 2}, {0, 3}, {1, 3}})};
  Rational last(2);
  for (unsigned n = 4; n <= 7; ++n) {
    const auto a = solve_max_avoiding(enumerate_copies(path, n)).objective;
    CHECK(a == solve_max_avoiding(enumerate_copies(moved, n)).objective);
    const Rational ratio(static_cast<std::int64_t>(a), static_cast<std::int64_t>(binom(n, 2)));
    CHECK(ratio <= last);
    last = ratio;
  }
  CHECK(hypergraph_id(path) != hypergraph_id(clique(4, 2)));
  CHECK(hypergraph_id(path) == hypergraph_id(UniformHypergraph{path.edges}));
}
