// Slow, obviously-correct reference implementations shared by the unit tests.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "daisy/constraint_system.hpp"
#include "daisy/set_family.hpp"

namespace oracle {

// All k-subsets of [n] as bitmasks, sorted colex: compare largest differing element.
inline std::vector<std::uint64_t> colex_masks(unsigned n, unsigned k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (static_cast<unsigned>(std::popcount(m)) == k) out.push_back(m);
  // For equal-size sets, colex order is plain numeric order of the bitmask.
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<daisy::Element> elements(std::uint64_t m) {
  std::vector<daisy::Element> out;
  for (unsigned i = 0; i < 64; ++i)
    if (m >> i & 1u) out.push_back(i);
  return out;
}

inline bool family_has(const daisy::SetFamily& f, std::uint64_t mask) {
  const auto e = elements(mask);
  return f.contains(std::span<const daisy::Element>(e));
}

// Number of (P, Q) daisy placements with every petal in f, by scanning mask pairs.
inline std::uint64_t daisy_count(const daisy::SetFamily& f, unsigned s, unsigned t) {
  const unsigned n = f.n(), r = f.r();
  std::uint64_t count = 0;
  for (std::uint64_t p : colex_masks(n, r - t))
    for (std::uint64_t q : colex_masks(n, s)) {
      if (p & q) continue;
      bool all = true;
      for (std::uint64_t sub = q;; sub = (sub - 1) & q) {
        if (static_cast<unsigned>(std::popcount(sub)) == t && !family_has(f, p | sub)) {
          all = false;
          break;
        }
        if (sub == 0) break;
      }
      count += all;
    }
  return count;
}

inline std::uint64_t placements(unsigned n, unsigned s, unsigned t, unsigned r) {
  std::uint64_t count = 0;
  for (std::uint64_t p : colex_masks(n, r - t))
    for (std::uint64_t q : colex_masks(n, s)) count += (p & q) == 0;
  return count;
}

inline std::vector<std::vector<daisy::Item>> random_constraints(std::mt19937_64& rng, unsigned m, unsigned count,
                                                                unsigned max_size) {
  std::uniform_int_distribution<unsigned> size(1, max_size);
  std::vector<std::vector<daisy::Item>> out;
  std::vector<daisy::Item> items(m);
  for (unsigned i = 0; i < m; ++i) items[i] = i;
  for (unsigned c = 0; c < count; ++c) {
    std::shuffle(items.begin(), items.end(), rng);
    const unsigned k = std::min(size(rng), m);
    out.emplace_back(items.begin(), items.begin() + k);
  }
  return out;
}

// Largest chosen set (as a mask over m items) containing no constraint.
inline std::uint64_t max_avoiding(unsigned m, const std::vector<std::vector<daisy::Item>>& cs,
                                  std::uint64_t forced_in = 0, std::uint64_t forced_out = 0) {
  std::vector<std::uint64_t> masks;
  for (const auto& c : cs) {
    std::uint64_t x = 0;
    for (auto i : c) x |= std::uint64_t{1} << i;
    masks.push_back(x);
  }
  std::uint64_t best = 0;
  bool any = false;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    if ((s & forced_in) != forced_in || (s & forced_out)) continue;
    bool ok = true;
    for (auto x : masks)
      if ((s & x) == x) {
        ok = false;
        break;
      }
    if (ok) {
      any = true;
      best = std::max<std::uint64_t>(best, std::popcount(s));
    }
  }
  return any ? best : 0;
}

}  // namespace oracle
