#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <span>
#include <vector>

#include "daisy/rset.hpp"

namespace daisy {

/// Families larger than this many potential members are refused.
inline constexpr std::uint64_t kMaxFamilyUniverse = 100'000'000;

/// An r-uniform family over [n], stored as a membership bitmap indexed by
/// colex rank. Built by insertion, then treated as a value.
class SetFamily {
 public:
  SetFamily() = default;
  /// Empty family. Throws ResourceRefusal when binom(n, r) exceeds kMaxFamilyUniverse.
  SetFamily(unsigned n, unsigned r);

  static SetFamily complete(unsigned n, unsigned r);
  /// Throws InvalidInput on wrong-size, unsorted, out-of-range or duplicate sets.
  static SetFamily from_sets(unsigned n, unsigned r, const std::vector<std::vector<Element>>& sets);

  unsigned n() const { return n_; }
  unsigned r() const { return r_; }
  /// binom(n, r): number of potential members.
  std::uint64_t universe() const { return bits_.size(); }
  std::uint64_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Rank rank) const { return rank < bits_.size() && bits_.test(rank); }
  bool contains(std::span<const Element> sorted) const;
  bool contains(const RSet& s) const { return contains(s.elements()); }

  void insert(Rank rank);
  void insert(std::span<const Element> sorted);
  void erase(Rank rank);

  /// Colex ranks of all members, ascending.
  std::vector<Rank> member_ranks() const;
  std::vector<RSet> members() const;

  template <typename Fn>
  void for_each_rank(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != Bitmap::npos; i = bits_.find_next(i)) fn(static_cast<Rank>(i));
  }

  bool is_subfamily_of(const SetFamily& other) const;
  bool operator==(const SetFamily& other) const = default;

  const boost::dynamic_bitset<std::uint64_t>& bitmap() const { return bits_; }

 private:
  using Bitmap = boost::dynamic_bitset<std::uint64_t>;
  unsigned n_ = 0;
  unsigned r_ = 0;
  Bitmap bits_;
};

/// {perm(A) : A in f}. Throws InvalidInput unless perm is a bijection on [0, n).
SetFamily relabel(const SetFamily& f, std::span<const Element> perm);

/// All r-sets of [n] not in f.
SetFamily complement_family(const SetFamily& f);

}  // namespace daisy
