#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "daisy/constraint_system.hpp"

namespace daisy {

struct SolverConfig {
  std::uint64_t node_limit = 1'000'000'000;
  unsigned workers = 1;
  /// Root-only orbit branching over ConstraintSystem::item_orbits().
  bool symmetry = false;

  /// Defaults, with DAISY_NODE_LIMIT overriding node_limit when set.
  static SolverConfig from_environment();
};

enum class SearchStatus {
  exact,
  /// Node limit reached. For max-avoiding the objective is a valid lower
  /// bound; for min-transversal it is the size of a valid transversal.
  lower_bound_only,
};

struct SearchResult {
  std::uint64_t objective = 0;
  std::vector<Item> witness;  // ascending item indices
  std::uint64_t nodes_explored = 0;
  SearchStatus status = SearchStatus::exact;
  double wall_time = 0.0;  // seconds
};

/// Largest item set containing no constraint entirely.
///
/// Branch and bound over include/exclude decisions. Branching item: the
/// undecided item in the most live constraints (no excluded item yet), ties to
/// the lowest index; include is tried before exclude. A constraint with one
/// undecided item and the rest included forces that item out. Items in no
/// live constraint are included outright. The incumbent starts from a greedy
/// transversal.
///
/// The tree is split at a fixed depth into subtrees solved by `workers`
/// threads. The reported witness is the first optimal leaf in depth-first
/// order (or the greedy incumbent when already optimal), so objective and
/// witness do not depend on the worker count.
SearchResult solve_max_avoiding(const ConstraintSystem& cs, const SolverConfig& cfg = {});

/// Smallest item set meeting every constraint: the complement of a maximum
/// avoiding set, so objective = item_count - max_avoiding.
SearchResult solve_min_transversal(const ConstraintSystem& cs, const SolverConfig& cfg = {});

/// Exhaustive 2^m search for the max-avoiding optimum. Test oracle only.
/// Throws ResourceRefusal when item_count > kOracleMaxItems.
inline constexpr std::size_t kOracleMaxItems = 24;
SearchResult brute_force_oracle(const ConstraintSystem& cs);

enum class ItemState : std::uint8_t { undecided, included, excluded };

/// Admissible bound for the best completion of a partial assignment:
/// included + undecided minus the size of a greedy packing of live constraints
/// (no excluded item) that are pairwise disjoint on their undecided items.
/// Greedy order: fewest undecided items first, then constraint index.
/// Returns 0 when some constraint is already fully included.
std::uint64_t packing_upper_bound(const ConstraintSystem& cs, std::span<const ItemState> state);

}  // namespace daisy
