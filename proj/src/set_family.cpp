#include "daisy/set_family.hpp"

#include <algorithm>
#include <string>

#include "daisy/binomial.hpp"
#include "daisy/errors.hpp"

namespace daisy {

SetFamily::SetFamily(unsigned n, unsigned r) : n_(n), r_(r) {
  if (r > n) throw InvalidInput("uniformity " + std::to_string(r) + " exceeds ground size " + std::to_string(n));
  const std::uint64_t universe = binom(n, r);
  if (universe > kMaxFamilyUniverse)
    throw ResourceRefusal("family over binom(" + std::to_string(n) + "," + std::to_string(r) +
                          ") = " + std::to_string(universe) + " sets exceeds the desk limit");
  bits_.resize(universe);
}

SetFamily SetFamily::complete(unsigned n, unsigned r) {
  SetFamily f(n, r);
  f.bits_.set();
  return f;
}

SetFamily SetFamily::from_sets(unsigned n, unsigned r, const std::vector<std::vector<Element>>& sets) {
  SetFamily f(n, r);
  for (const auto& s : sets) {
    if (s.size() != r)
      throw InvalidInput("set of size " + std::to_string(s.size()) + " in a " + std::to_string(r) +
                         "-uniform family");
    const RSet checked(n, s);
    const Rank rank = colex_rank(checked);
    if (f.bits_.test(rank)) throw InvalidInput("duplicate set in family");
    f.bits_.set(rank);
  }
  return f;
}

bool SetFamily::contains(std::span<const Element> sorted) const {
  if (sorted.size() != r_) return false;
  if (!sorted.empty() && sorted.back() >= n_) return false;
  return bits_.test(colex_rank(sorted));
}

void SetFamily::insert(Rank rank) {
  if (rank >= bits_.size()) throw InvalidInput("rank outside family universe");
  bits_.set(rank);
}

void SetFamily::insert(std::span<const Element> sorted) {
  if (sorted.size() != r_) throw InvalidInput("inserted set has the wrong size");
  if (!sorted.empty() && sorted.back() >= n_) throw InvalidInput("inserted set leaves the ground set");
  bits_.set(colex_rank(sorted));
}

void SetFamily::erase(Rank rank) {
  if (rank >= bits_.size()) throw InvalidInput("rank outside family universe");
  bits_.reset(rank);
}

std::vector<Rank> SetFamily::member_ranks() const {
  std::vector<Rank> out;
  out.reserve(size());
  for_each_rank([&](Rank rank) { out.push_back(rank); });
  return out;
}

std::vector<RSet> SetFamily::members() const {
  std::vector<RSet> out;
  out.reserve(size());
  for_each_rank([&](Rank rank) { out.push_back(colex_unrank(rank, n_, r_)); });
  return out;
}

bool SetFamily::is_subfamily_of(const SetFamily& other) const {
  return n_ == other.n_ && r_ == other.r_ && bits_.is_subset_of(other.bits_);
}

SetFamily relabel(const SetFamily& f, std::span<const Element> perm) {
  if (perm.size() != f.n()) throw InvalidInput("permutation length does not match ground size");
  std::vector<bool> seen(f.n(), false);
  for (Element e : perm) {
    if (e >= f.n() || seen[e]) throw InvalidInput("relabeling is not a bijection on the ground set");
    seen[e] = true;
  }
  SetFamily out(f.n(), f.r());
  std::vector<Element> buf(f.r());
  f.for_each_rank([&](Rank rank) {
    colex_unrank_into(rank, f.r(), buf);
    for (auto& e : buf) e = perm[e];
    std::sort(buf.begin(), buf.end());
    out.insert(colex_rank(buf));
  });
  return out;
}

SetFamily complement_family(const SetFamily& f) {
  SetFamily out = SetFamily::complete(f.n(), f.r());
  f.for_each_rank([&](Rank rank) { out.erase(rank); });
  return out;
}

}  // namespace daisy
