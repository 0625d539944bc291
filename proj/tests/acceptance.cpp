// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "daisy/binomial.hpp"
#include "daisy/constraint_system.hpp"
#include "daisy/constructions.hpp"
#include "daisy/daisy_model.hpp"
#include "daisy/density_report.hpp"
#include "daisy/errors.hpp"
#include "daisy/hypercube.hpp"
#include "daisy/products.hpp"
#include "daisy/solver.hpp"

using namespace daisy;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> failures;
  void expect(bool cond, std::string what) {
    if (!cond) {
      ok = false;
      failures.push_back(std::move(what));
    }
  }
};

Rational ratio(std::uint64_t a, std::uint64_t b) {
  return Rational(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
}

std::string str(const Rational& q) { return rational_string(q); }

void fano_golden(Check& c) {
  const auto f = fano_complement();
  c.expect(f.size() == 28, "fano complement has " + std::to_string(f.size()) + " members");
  c.expect(is_daisy_free(f, DaisyPattern::plain(3)), "fano complement contains a daisy");
  c.expect(ratio(f.size(), binom(7, 3)) == Rational(4, 5), "density is " + str(ratio(f.size(), binom(7, 3))));
}

void iterated_construction(Check& c) {
  // (1 - 49^-k) 7^{3k} / 12 == (49^k - 1) 7^k / 12
  const auto f1 = iterated_fano(1);
  c.expect(f1.size() == (49 - 1) * 7 / 12, "k=1 count " + std::to_string(f1.size()));
  const auto f2 = iterated_fano(2);
  c.expect(f2.size() == (49 * 49 - 1) * 49 / 12, "k=2 count " + std::to_string(f2.size()));
  c.expect(2 * f2.size() == binom(50, 3), "k=2 count is not half of binom(50,3)");
  const auto instances = daisy_instance_count(49, DaisyPattern::plain(3));
  c.expect(instances == 49 * binom(48, 4), "instance count " + std::to_string(instances));
  c.expect(is_daisy_free(f2, DaisyPattern::plain(3)), "k=2 family contains a daisy");
  std::printf("  info: k=2 scan covered %llu daisy instances\n", static_cast<unsigned long long>(instances));
}

void turan_cross_check(Check& c) {
  Rational last(1);
  for (unsigned n = 4; n <= 9; ++n) {
    const auto turan =
        blowup(BlowupSpec{SetFamily::complete(3, 2), Partition::even_split(n, 3)}, n).size();
    const auto got = solve_max_avoiding(build_daisy_constraints(n, DaisyPattern::plain(2)));
    c.expect(got.status == SearchStatus::exact, "n=" + std::to_string(n) + " not exact");
    c.expect(got.objective == turan,
             "n=" + std::to_string(n) + ": ex " + std::to_string(got.objective) + " vs " + std::to_string(turan));
    const auto q = ratio(got.objective, binom(n, 2));
    c.expect(q <= last && q >= Rational(2, 3), "ratio " + str(q) + " at n=" + std::to_string(n));
    last = q;
  }
  const std::uint64_t expect[] = {5, 8, 12, 16, 21, 27};
  for (unsigned n = 4; n <= 9; ++n)
    c.expect(blowup(BlowupSpec{SetFamily::complete(3, 2), Partition::even_split(n, 3)}, n).size() == expect[n - 4],
             "Turan graph count at n=" + std::to_string(n));
}

void oracle_equivalence(Check& c) {
  std::mt19937_64 rng(2024);
  unsigned systems = 0;
  for (unsigned m = 1; m <= 20; ++m)
    for (unsigned k = 0; k < 30; k += 3) {
      std::vector<std::vector<Item>> cons;
      std::vector<Item> items(m);
      for (unsigned i = 0; i < m; ++i) items[i] = i;
      for (unsigned j = 0; j < k; ++j) {
        std::shuffle(items.begin(), items.end(), rng);
        cons.emplace_back(items.begin(), items.begin() + 1 + rng() % std::min(m, 5u));
      }
      const ConstraintSystem cs(m, cons);
      const auto a = solve_max_avoiding(cs).objective;
      const auto b = brute_force_oracle(cs).objective;
      c.expect(a == b, "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + std::to_string(a) + " vs " +
                           std::to_string(b));
      ++systems;
    }
  const auto d6 = build_daisy_constraints(6, DaisyPattern::plain(3));
  c.expect(d6.item_count() == 20 && d6.constraints().size() == 30, "n=6 daisy system shape");
  const auto a = solve_max_avoiding(d6).objective;
  const auto b = brute_force_oracle(d6).objective;
  c.expect(a == b, "n=6 daisy: " + std::to_string(a) + " vs " + std::to_string(b));
  std::printf("  info: %u random systems plus ex(6, D3) = %llu\n", systems, static_cast<unsigned long long>(a));
}

void correspondence(Check& c) {
  const auto rep = transversal_daisy_correspondence(6);
  c.expect(rep.cube_count == 30 && rep.daisy_count == 30, "expected 30 cubes and 30 daisies");
  c.expect(rep.slices_match, "a middle-layer slice differs from its petal set");
  c.expect(rep.solves_exact, "a solve did not close");
  c.expect(rep.min_transversal + rep.ex_value == binom(6, 3), "identity: " + std::to_string(rep.min_transversal) +
                                                                   " + " + std::to_string(rep.ex_value));
  c.expect(rep.bijection_holds, "transversal/daisy-free equivalence fails");
  std::printf("  info: %llu + %llu = 20; %llu families checked\n", static_cast<unsigned long long>(rep.min_transversal),
              static_cast<unsigned long long>(rep.ex_value), static_cast<unsigned long long>(rep.families_checked));
}

void hypercube_evidence(Check& c) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto r = min_subcube_transversal(n, 1, false, false);
    c.expect(r.objective == (1u << (n - 1)), "edge cover of Q_" + std::to_string(n));
    c.expect(ratio(r.objective, 1u << n) == Rational(1, 2), "t_1 density at n=" + std::to_string(n));
  }
  const auto q4 = min_subcube_transversal(4, 2, false, false);
  const auto q5 = min_subcube_transversal(5, 2, false, false);
  const auto d4 = ratio(q4.objective, 16), d5 = ratio(q5.objective, 32);
  c.expect(d5 <= d4, "d=2 densities increase from n=4 to n=5: " + str(d4) + " -> " + str(d5));
  c.expect(d4 >= Rational(1, 3), "d=2 density at n=4 is " + str(d4) + " < 1/3");
  c.expect(d5 >= Rational(1, 3), "d=2 density at n=5 is " + str(d5) + " < 1/3");
  const auto acs = min_subcube_transversal(6, 4, false, false);
  c.expect(acs.objective >= 2, "4-cubes of Q_6 met by " + std::to_string(acs.objective) + " points");
  std::printf("  info: d=2 exact densities n=4: %s, n=5: %s; layered upper bound 1/3; Q_6 4-cubes need %llu\n",
              str(d4).c_str(), str(d5).c_str(), static_cast<unsigned long long>(acs.objective));
  const auto q6 = min_subcube_transversal(6, 2, false, false);
  std::printf("  info: d=2 exact density n=6: %s (nondecreasing in n, bounded above by 1/3)\n",
              str(ratio(q6.objective, 64)).c_str());
}

void layered_properties(Check& c) {
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned d = 1; d <= std::min(3u, n); ++d) {
      const auto cubes = enumerate_subcubes(n, d);
      for (unsigned off = 0; off <= d; ++off) {
        const auto vs = layered_transversal(n, d, off);
        const std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " off=" + std::to_string(off);
        c.expect(is_transversal(vs, cubes).ok, tag + " is not a transversal");
        std::uint64_t layer_sum = 0;
        for (unsigned k = off; k <= n; k += d + 1) layer_sum += binom(n, k);
        c.expect(vs.size() == layer_sum, tag + " size differs from the layer sum");
        if (n > 8) continue;
        const auto most = max_points_in_some_dcube(vs, d).count;
        if (n >= 2 * d)
          c.expect(most == binom(d, d / 2), tag + ": most points in a cube " + std::to_string(most));
        else
          c.expect(most <= binom(d, d / 2), tag + ": most points in a cube " + std::to_string(most));
      }
    }
}

void bound_consistency(Check& c) {
  std::size_t checks = 0;
  for (const auto& p : {DaisyPattern::make(3, 4, 3), DaisyPattern::make(3, 4, 1), DaisyPattern::plain(3),
                        DaisyPattern::plain(2), DaisyPattern::make(2, 3, 2), DaisyPattern::make(2, 3, 1)}) {
    const auto table = ex_table(ExProblem::daisy(p), p.min_ground(), p.r == 2 ? 8 : 7);
    c.expect(table.monotone, pattern_id(p) + " ratios are not monotone");
    try {
      checks += verify_bounds(table.records).checks;
    } catch (const BoundViolation& e) {
      c.expect(false, e.what());
    }
  }
  c.expect(checks > 0, "no bound was checked");
  std::printf("  info: %zu bound checks, zero violations required\n", checks);
}

void generator_cross_validation(Check& c) {
  const auto p = DaisyPattern::plain(3);
  const auto base = enumerate_daisies(p.min_ground(), p).front();
  const UniformHypergraph abstract{SetFamily::from_sets(p.min_ground(), 3, base.petals)};
  const auto copies = enumerate_copies(abstract, 6);
  const auto direct = build_daisy_constraints(6, p);
  const std::set<std::vector<Item>> a(copies.constraints().begin(), copies.constraints().end());
  const std::set<std::vector<Item>> b(direct.constraints().begin(), direct.constraints().end());
  c.expect(copies.item_count() == direct.item_count(), "item counts differ");
  c.expect(a == b, "constraint sets differ");
  c.expect(a.size() == 30, "expected 30 copies, got " + std::to_string(a.size()));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"Fano golden values", fano_golden},
      {"iterated construction", iterated_construction},
      {"Turan cross-check (r = 2)", turan_cross_check},
      {"oracle equivalence", oracle_equivalence},
      {"correspondence identity at n = 6", correspondence},
      {"hypercube evidence", hypercube_evidence},
      {"layered-construction properties", layered_properties},
      {"closed-form bound consistency", bound_consistency},
      {"generator cross-validation", generator_cross_validation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%.2f s)\n", check.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs);
    for (const auto& f : check.failures) std::printf("  - %s\n", f.c_str());
    std::fflush(stdout);
    failed += !check.ok;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
