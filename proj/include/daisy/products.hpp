#pragma once

#include <cstdint>

#include "daisy/constraint_system.hpp"
#include "daisy/set_family.hpp"

namespace daisy {

/// A u-uniform hypergraph on [m]; the edge set is a SetFamily.
struct UniformHypergraph {
  SetFamily edges;

  unsigned ground() const { return edges.n(); }
  unsigned uniformity() const { return edges.r(); }
  std::uint64_t edge_count() const { return edges.size(); }

  bool operator==(const UniformHypergraph&) const = default;
};

/// F * G on the disjoint union [m_F + m_G] (G shifted by m_F): all A u B with
/// A in F and B in G.
UniformHypergraph star_product(const UniformHypergraph& f, const UniformHypergraph& g);

/// F * F * ... * F (d factors, left-associated). Throws InvalidInput for d == 0.
UniformHypergraph power(const UniformHypergraph& f, unsigned d);

inline constexpr unsigned kMaxPatternVertices = 8;
inline constexpr std::uint64_t kMaxInjections = 50'000'000;

/// Items: all u-sets of [n] by colex rank. One constraint per distinct copy
/// of H, a copy being the edge image of an injection of H's non-isolated
/// vertices into [n]; copies related by an automorphism collapse. Constraints
/// are sorted lexicographically. No constraints when n < m_H.
ConstraintSystem enumerate_copies(const UniformHypergraph& h, unsigned n);

/// Stable FNV-1a digest of the edge list, used as a problem id.
std::string hypergraph_id(const UniformHypergraph& h);

}  // namespace daisy
