#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "daisy/daisy_model.hpp"
#include "daisy/rset.hpp"

namespace daisy {

using Item = std::uint32_t;

/// Ground items plus forbidden configurations. A set of items "avoids" the
/// system when it contains no constraint entirely; it is a transversal when
/// it meets every constraint.
class ConstraintSystem {
 public:
  ConstraintSystem() = default;

  /// Sorts each constraint, drops repeated constraints (keeping first
  /// occurrence order) and validates indices. Throws InvalidInput on an empty
  /// constraint, an out-of-range index, or an item repeated inside a constraint.
  ConstraintSystem(std::size_t item_count, std::vector<std::vector<Item>> constraints);

  std::size_t item_count() const { return item_count_; }
  const std::vector<std::vector<Item>>& constraints() const { return constraints_; }

  /// Optional: the ground subset each item stands for (an r-set, a cube vertex).
  const std::vector<std::vector<Element>>& labels() const { return labels_; }
  void set_labels(std::vector<std::vector<Element>> labels);

  /// Optional: item orbits of a symmetry group of the system, used by the
  /// solver's root symmetry branching. Each orbit must be closed under the
  /// group; items not listed are treated as fixed points.
  const std::vector<std::vector<Item>>& item_orbits() const { return orbits_; }
  void set_item_orbits(std::vector<std::vector<Item>> orbits);

 private:
  std::size_t item_count_ = 0;
  std::vector<std::vector<Item>> constraints_;
  std::vector<std::vector<Element>> labels_;
  std::vector<std::vector<Item>> orbits_;
};

/// True when no constraint lies entirely inside `chosen` (sorted or not).
bool avoids_all(const ConstraintSystem& cs, std::span<const Item> chosen);
/// True when every constraint meets `chosen`.
bool hits_all(const ConstraintSystem& cs, std::span<const Item> chosen);

/// Items = all r-sets of [n] by colex rank; one constraint per daisy instance
/// holding its petal ranks. Throws InvalidInput when n < r.
ConstraintSystem build_daisy_constraints(unsigned n, const DaisyPattern& pattern);

}  // namespace daisy
