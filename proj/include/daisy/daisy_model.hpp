#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "daisy/rset.hpp"
#include "daisy/set_family.hpp"

namespace daisy {

/// D_r(s,t): all r-sets containing an (r-t)-set stem P and contained in P u Q
/// for an s-set Q disjoint from P. (4,2) is the plain daisy.
struct DaisyPattern {
  unsigned r = 0;
  unsigned s = 0;
  unsigned t = 0;

  /// Throws InvalidInput unless 1 <= t <= min(s, r).
  static DaisyPattern make(unsigned r, unsigned s, unsigned t);
  /// The plain daisy D_r(4,2).
  static DaisyPattern plain(unsigned r) { return make(r, 4, 2); }
  /// Parses "r,s,t".
  static DaisyPattern parse(std::string_view text);

  unsigned stem_size() const { return r - t; }
  std::uint64_t petal_count() const;
  /// Smallest ground set that holds an instance.
  unsigned min_ground() const { return r - t + s; }

  bool operator==(const DaisyPattern&) const = default;
};

struct DaisyInstance {
  std::vector<Element> stem;      // P
  std::vector<Element> free_set;  // Q
  /// P u T for each t-subset T of Q, in colex order of T.
  std::vector<std::vector<Element>> petals;
  std::vector<Rank> petal_ranks;
};

DaisyInstance instantiate(const DaisyPattern& pattern, std::span<const Element> stem,
                          std::span<const Element> free_set);

/// binom(n, r-t) * binom(n-r+t, s).
std::uint64_t daisy_instance_count(unsigned n, const DaisyPattern& pattern);

/// Streams every instance on [n] (stem colex-major, free set colex-minor) to
/// fn(stem, free_set, petal_ranks). Stops when fn returns false.
template <typename Fn>
void for_each_daisy(unsigned n, const DaisyPattern& pattern, Fn&& fn);

/// Materialized enumeration. Empty when n < r-t+s. Throws ResourceRefusal above
/// kMaxMaterializedDaisies instances; use for_each_daisy for large scans.
inline constexpr std::uint64_t kMaxMaterializedDaisies = 2'000'000;
std::vector<DaisyInstance> enumerate_daisies(unsigned n, const DaisyPattern& pattern);

/// First instance (in enumeration order) whose petals all lie in f.
std::optional<DaisyInstance> find_daisy(const SetFamily& f, const DaisyPattern& pattern);
bool is_daisy_free(const SetFamily& f, const DaisyPattern& pattern);
std::uint64_t daisy_count(const SetFamily& f, const DaisyPattern& pattern);

/// Witnesses that an instance of D_r(s,t) sits inside an instance of
/// D_r(s+1,t) and, when t+1 <= r, of D_r(s+1,t+1).
struct ContainmentWitness {
  unsigned n = 0;
  DaisyInstance base;
  std::optional<DaisyInstance> wider;   // D_r(s+1, t)
  std::optional<DaisyInstance> deeper;  // D_r(s+1, t+1)
};

/// Searches ground [n] (default r-t+s+1) for the witnesses by explicit
/// petal-set inclusion, starting from the first D_r(s,t) instance.
ContainmentWitness containment_check(const DaisyPattern& pattern, std::optional<unsigned> n = std::nullopt);

// ---------------------------------------------------------------------------

template <typename Fn>
void for_each_daisy(unsigned n, const DaisyPattern& pattern, Fn&& fn) {
  if (n < pattern.min_ground()) return;
  const unsigned stem_size = pattern.stem_size();
  const unsigned rest = n - stem_size;
  std::vector<Element> outside(rest);
  std::vector<Element> free_set(pattern.s);
  std::vector<Rank> ranks(pattern.petal_count());
  std::vector<Element> petal(pattern.r);

  // Petal shapes depend only on positions within Q; precompute index subsets.
  std::vector<std::vector<Element>> shapes;
  for_each_combination(pattern.s, pattern.t, [&](std::span<const Element> c) {
    shapes.emplace_back(c.begin(), c.end());
    return true;
  });

  for_each_combination(n, stem_size, [&](std::span<const Element> stem) {
    for (Element e = 0, j = 0, k = 0; e < n; ++e) {
      if (j < stem.size() && stem[j] == e)
        ++j;
      else
        outside[k++] = e;
    }
    return for_each_combination(rest, pattern.s, [&](std::span<const Element> idx) {
      for (unsigned i = 0; i < pattern.s; ++i) free_set[i] = outside[idx[i]];
      for (std::size_t p = 0; p < shapes.size(); ++p) {
        // Merge stem and the chosen free elements into sorted petal.
        std::size_t a = 0, b = 0, o = 0;
        const auto& shape = shapes[p];
        while (a < stem.size() || b < shape.size()) {
          if (b == shape.size() || (a < stem.size() && stem[a] < free_set[shape[b]]))
            petal[o++] = stem[a++];
          else
            petal[o++] = free_set[shape[b++]];
        }
        ranks[p] = colex_rank(petal);
      }
      return fn(stem, std::span<const Element>(free_set), std::span<const Rank>(ranks));
    });
  });
}

}  // namespace daisy
