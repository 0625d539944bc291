#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "daisy/constraint_system.hpp"
#include "daisy/density_record.hpp"
#include "daisy/set_family.hpp"
#include "daisy/solver.hpp"

namespace daisy {

/// A vertex of Q_n: bit i set iff element i is present.
using Vertex = std::uint64_t;

inline constexpr unsigned kMaxCubeDimension = 26;

/// {P u S : S subset of Q}; coordinates outside P u Q are 0.
struct Subcube {
  Vertex fixed_ones = 0;  // P
  Vertex free = 0;        // Q

  unsigned dimension() const;
  bool contains(Vertex v) const { return (v & ~(fixed_ones | free)) == 0 && (v & fixed_ones) == fixed_ones; }
  /// All 2^d vertices, ascending in the free-subset counter.
  std::vector<Vertex> vertices() const;

  bool operator==(const Subcube&) const = default;
};

/// Vertex subset of Q_n as a 2^n-bit membership map.
class CubeVertexSet {
 public:
  CubeVertexSet() = default;
  explicit CubeVertexSet(unsigned n);
  static CubeVertexSet full(unsigned n);

  unsigned n() const { return n_; }
  std::uint64_t size() const { return bits_.count(); }
  bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }
  void insert(Vertex v);
  std::vector<Vertex> vertices() const;

  bool operator==(const CubeVertexSet&) const = default;

 private:
  unsigned n_ = 0;
  boost::dynamic_bitset<std::uint64_t> bits_;
};

// Vertex-set file: first line n, then one vertex per line as an n-character
// bit-string, character i = element i.
CubeVertexSet read_vertex_set(std::istream& in);
void write_vertex_set(std::ostream& out, const CubeVertexSet& vs);
CubeVertexSet load_vertex_set(const std::filesystem::path& path);

/// All d-subcubes: free set Q colex-major, fixed ones ascending as integers.
/// binom(n,d) * 2^(n-d) cubes.
std::vector<Subcube> enumerate_subcubes(unsigned n, unsigned d);

/// The 2d-subcubes spanning layers n/2-d .. n/2+d (dim = 2d): stem colex-major,
/// free set colex-minor, the same order as daisy enumeration. Throws
/// InvalidInput when n or dim is odd or dim > n.
std::vector<Subcube> enumerate_middle_subcubes(unsigned n, unsigned dim);

struct TransversalCheck {
  bool ok = true;
  std::optional<Subcube> missed;  // first cube with no vertex of the set
};
TransversalCheck is_transversal(const CubeVertexSet& vs, std::span<const Subcube> cubes);

/// Items and constraints for a subcube-transversal problem. With
/// restrict_to_middle_layer the items are the n/2-sets in colex order, so
/// item indices coincide with colex ranks.
struct TransversalInstance {
  ConstraintSystem system;
  std::vector<Vertex> item_vertices;
};

inline constexpr unsigned kMaxTransversalCube = 6;         // unrestricted: 64 items
inline constexpr unsigned kMaxMiddleLayerTransversal = 8;  // restricted: 70 items

TransversalInstance transversal_instance(unsigned n, unsigned d, bool middle_only, bool restrict_to_middle_layer);

/// Exact minimum number of allowed vertices meeting every listed subcube.
/// `d` is the cube dimension (even when middle_only).
SearchResult min_subcube_transversal(unsigned n, unsigned d, bool middle_only, bool restrict_to_middle_layer,
                                     const SolverConfig& cfg = {});

/// {A \ R : R subset of A}, on [n] \ R relabeled to [n - |R|] in order.
SetFamily link(const SetFamily& family, std::span<const Element> removed);

struct CorrespondenceReport {
  unsigned n = 0;
  unsigned dim = 0;
  std::uint64_t cube_count = 0;
  std::uint64_t daisy_count = 0;
  /// Every middle cube's middle-layer slice equals the matching daisy's petals.
  bool slices_match = false;
  std::uint64_t layer_size = 0;
  std::uint64_t min_transversal = 0;
  std::uint64_t ex_value = 0;
  bool solves_exact = false;
  /// min_transversal + ex_value == layer_size.
  bool identity_holds = false;
  /// Families checked for "transversal <=> complement daisy-free".
  std::uint64_t families_checked = 0;
  bool exhaustive = false;
  bool bijection_holds = false;
};

/// Checks that a middle-layer family meets every middle dim-cube exactly
/// when its middle-layer complement is D_{n/2}(dim, dim/2)-free. Families
/// are enumerated exhaustively up to 20 middle-layer sets, otherwise 10^4
/// are sampled with a fixed seed. n even, n <= 8.
CorrespondenceReport transversal_daisy_correspondence(unsigned n, unsigned dim = 4, const SolverConfig& cfg = {});

struct CubeMax {
  std::uint64_t count = 0;
  Subcube cube;
};

/// Most vertices of vs inside one d-subcube; first maximizer in enumeration order.
CubeMax max_points_in_some_dcube(const CubeVertexSet& vs, unsigned d);

struct SmallCubeRow {
  unsigned d = 0;
  std::uint64_t exact_minimum = 0;  // all d-cubes of Q_{d+2}
  std::uint64_t log_bound = 0;      // ceil(log2 d)
  bool holds = false;
};

struct TdTable {
  unsigned d = 0;
  std::vector<DensityRecord> records;
  std::vector<std::string> notes;
  /// Exact densities never decrease with n.
  bool nondecreasing = true;
  std::optional<SmallCubeRow> small_cube;
};

/// Exact minimum d-cube transversal densities for n = d .. n_max (rows beyond
/// kMaxTransversalCube are skipped with a note), with the bracket
/// ceil(log2 d)/2^(d+2) <= density (n >= d+2, d >= 2) and density <= 1/(d+1),
/// plus the exact Q_{d+2} minimum against ceil(log2 d) when d+2 fits.
TdTable td_evidence_table(unsigned d, unsigned n_max, const SolverConfig& cfg = {});

}  // namespace daisy
