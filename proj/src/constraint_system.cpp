#include "daisy/constraint_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "daisy/binomial.hpp"
#include "daisy/errors.hpp"

namespace daisy {

ConstraintSystem::ConstraintSystem(std::size_t item_count, std::vector<std::vector<Item>> constraints)
    : item_count_(item_count) {
  std::set<std::vector<Item>> seen;
  constraints_.reserve(constraints.size());
  for (auto& c : constraints) {
    if (c.empty()) throw InvalidInput("constraint with no items");
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw InvalidInput("item repeated inside a constraint");
    if (c.back() >= item_count)
      throw InvalidInput("constraint refers to item " + std::to_string(c.back()) + " of " +
                         std::to_string(item_count));
    if (seen.insert(c).second) constraints_.push_back(std::move(c));
  }
}

void ConstraintSystem::set_labels(std::vector<std::vector<Element>> labels) {
  if (!labels.empty() && labels.size() != item_count_) throw InvalidInput("one label per item required");
  labels_ = std::move(labels);
}

void ConstraintSystem::set_item_orbits(std::vector<std::vector<Item>> orbits) {
  std::vector<bool> seen(item_count_, false);
  for (auto& orbit : orbits) {
    std::sort(orbit.begin(), orbit.end());
    for (Item i : orbit) {
      if (i >= item_count_ || seen[i]) throw InvalidInput("item orbits must be disjoint and in range");
      seen[i] = true;
    }
  }
  orbits_ = std::move(orbits);
}

bool avoids_all(const ConstraintSystem& cs, std::span<const Item> chosen) {
  std::vector<bool> in(cs.item_count(), false);
  for (Item i : chosen) in.at(i) = true;
  for (const auto& c : cs.constraints())
    if (std::all_of(c.begin(), c.end(), [&](Item i) { return in[i]; })) return false;
  return true;
}

bool hits_all(const ConstraintSystem& cs, std::span<const Item> chosen) {
  std::vector<bool> in(cs.item_count(), false);
  for (Item i : chosen) in.at(i) = true;
  for (const auto& c : cs.constraints())
    if (std::none_of(c.begin(), c.end(), [&](Item i) { return in[i]; })) return false;
  return true;
}

ConstraintSystem build_daisy_constraints(unsigned n, const DaisyPattern& pattern) {
  if (n < pattern.r) throw InvalidInput("ground set smaller than the pattern uniformity");
  const std::uint64_t items = binom(n, pattern.r);
  std::vector<std::vector<Item>> constraints;
  constraints.reserve(daisy_instance_count(n, pattern));
  for_each_daisy(n, pattern, [&](auto, auto, auto ranks) {
    constraints.emplace_back(ranks.begin(), ranks.end());
    return true;
  });
  ConstraintSystem cs(items, std::move(constraints));

  std::vector<std::vector<Element>> labels;
  labels.reserve(items);
  for (Rank i = 0; i < items; ++i) {
    const auto s = colex_unrank(i, n, pattern.r);
    labels.emplace_back(s.elements().begin(), s.elements().end());
  }
  cs.set_labels(std::move(labels));

  // S_n acts transitively on r-sets.
  std::vector<Item> all(items);
  std::iota(all.begin(), all.end(), Item{0});
  cs.set_item_orbits({std::move(all)});
  return cs;
}

}  // namespace daisy
