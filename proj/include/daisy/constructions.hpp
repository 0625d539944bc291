#pragma once

#include <cstdint>
#include <vector>

#include "daisy/hypercube.hpp"
#include "daisy/set_family.hpp"

namespace daisy {

/// Assignment of ground elements to classes 0..k-1.
struct Partition {
  std::vector<unsigned> class_of;
  std::vector<unsigned> sizes;

  /// Contiguous blocks; the first (n mod k) classes get ceil(n/k) elements.
  static Partition even_split(unsigned n, unsigned k);
  /// Elements of class c, ascending.
  std::vector<Element> members(unsigned c) const;
  unsigned class_count() const { return static_cast<unsigned>(sizes.size()); }
};

/// Base family on the class indices: an edge is an allowed class-tuple.
struct BlowupSpec {
  SetFamily base;
  Partition partition;
};

/// r-sets of [n] with one element in each of r even-split classes.
SetFamily complete_multipartite(unsigned n, unsigned r);

/// The seven lines {a, a+1, a+3} mod 7.
SetFamily fano_lines();
/// The 28 triples of [7] that are not Fano lines.
SetFamily fano_complement();

/// Transversal sets over the classes whose class-tuple is a base edge.
/// Sets meeting a class twice are never members.
SetFamily blowup(const BlowupSpec& spec, unsigned n);

/// 7^k points: the blow-up of the Fano complement over seven contiguous
/// blocks of 7^(k-1), plus the same construction inside every block.
SetFamily iterated_fano(unsigned k);

/// r-sets whose intersection with each of k even-split classes has size
/// within delta of r/k, with every intersection even (r even) or every one
/// even except the last class, which is odd (r odd).
SetFamily parity_family(unsigned n, unsigned k, unsigned r, unsigned delta);

struct WindowCount {
  std::uint64_t count = 0;
  std::vector<Element> window;
};

/// Most members of f inside a single w-subset of [n]; the first maximizing
/// window in colex order.
inline constexpr std::uint64_t kMaxWindows = 10'000'000;
WindowCount max_members_in_window(const SetFamily& f, unsigned w);

/// Vertices of Q_n whose size is congruent to offset mod (d+1).
CubeVertexSet layered_transversal(unsigned n, unsigned d, unsigned offset);

}  // namespace daisy
