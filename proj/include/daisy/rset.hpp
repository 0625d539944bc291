#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace daisy {

using Element = std::uint32_t;
using Rank = std::uint64_t;

/// An r-subset of the ground set {0, ..., n-1}, stored as a strictly
/// increasing element list.
class RSet {
 public:
  RSet() = default;
  /// Throws InvalidInput unless `elements` is strictly increasing and inside [0, n).
  RSet(unsigned n, std::vector<Element> elements);

  unsigned n() const { return n_; }
  unsigned r() const { return static_cast<unsigned>(elements_.size()); }
  std::span<const Element> elements() const { return elements_; }
  bool contains(Element e) const;

  bool operator==(const RSet&) const = default;

 private:
  unsigned n_ = 0;
  std::vector<Element> elements_;
};

/// Colex comparison: compare largest elements first.
std::strong_ordering colex_compare(std::span<const Element> a, std::span<const Element> b);

/// Sum of binom(s_i, i+1). Bijective onto [0, binom(n, r)) for r-subsets of [n].
Rank colex_rank(const RSet& s);

/// Unchecked variant for hot loops; `sorted` must be strictly increasing.
Rank colex_rank(std::span<const Element> sorted);

/// Inverse of colex_rank. Throws std::out_of_range when i >= binom(n, r).
RSet colex_unrank(Rank i, unsigned n, unsigned r);

/// Writes the elements of the rank-i r-set into `out` (size r). Unchecked.
void colex_unrank_into(Rank i, unsigned r, std::span<Element> out);

/// Advances `combo` (a strictly increasing k-subset of [n]) to its colex
/// successor. Returns false after the last subset.
bool next_colex(std::span<Element> combo, unsigned n);

/// Calls fn(std::span<const Element>) for every k-subset of [n] in colex order.
/// Stops early when fn returns false; returns false in that case.
template <typename Fn>
bool for_each_combination(unsigned n, unsigned k, Fn&& fn) {
  if (k > n) return true;
  std::vector<Element> combo(k);
  for (unsigned i = 0; i < k; ++i) combo[i] = i;
  do {
    if (!fn(std::span<const Element>(combo))) return false;
  } while (next_colex(combo, n));
  return true;
}

/// Bitmask of the set (elements must be < 64).
std::uint64_t to_mask(std::span<const Element> elements);
std::vector<Element> from_mask(std::uint64_t mask);

}  // namespace daisy
