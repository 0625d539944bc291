#include "daisy/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "daisy/binomial.hpp"
#include "daisy/daisy_model.hpp"
#include "daisy/errors.hpp"

namespace daisy {

unsigned Subcube::dimension() const { return static_cast<unsigned>(std::popcount(free)); }

std::vector<Vertex> Subcube::vertices() const {
  std::vector<Vertex> out;
  out.reserve(std::size_t{1} << dimension());
  // Enumerate subsets of `free` with the standard submask walk, ascending.
  Vertex sub = 0;
  do {
    out.push_back(fixed_ones | sub);
    sub = (sub - free) & free;
  } while (sub != 0);
  return out;
}

CubeVertexSet::CubeVertexSet(unsigned n) : n_(n) {
  if (n > kMaxCubeDimension)
    throw ResourceRefusal("Q_" + std::to_string(n) + " exceeds the supported cube dimension " +
                          std::to_string(kMaxCubeDimension));
  bits_.resize(std::size_t{1} << n);
}

CubeVertexSet CubeVertexSet::full(unsigned n) {
  CubeVertexSet vs(n);
  vs.bits_.set();
  return vs;
}

void CubeVertexSet::insert(Vertex v) {
  if (v >= bits_.size()) throw InvalidInput("vertex outside Q_" + std::to_string(n_));
  bits_.set(v);
}

std::vector<Vertex> CubeVertexSet::vertices() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<std::uint64_t>::npos; i = bits_.find_next(i))
    out.push_back(i);
  return out;
}

CubeVertexSet read_vertex_set(std::istream& in) {
  std::string line;
  std::optional<CubeVertexSet> vs;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    std::string extra;
    if (fields >> extra) throw InvalidInput("vertex-set lines hold a single token");
    if (!vs) {
      if (token.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidInput("vertex-set header must be the cube dimension");
      vs.emplace(static_cast<unsigned>(std::stoul(token)));
      continue;
    }
    if (token.size() != vs->n()) throw InvalidInput("vertex bit-string '" + token + "' has the wrong length");
    Vertex v = 0;
    for (unsigned i = 0; i < token.size(); ++i) {
      if (token[i] == '1')
        v |= Vertex{1} << i;
      else if (token[i] != '0')
        throw InvalidInput("vertex bit-string '" + token + "' must contain only 0 and 1");
    }
    if (vs->contains(v)) throw InvalidInput("duplicate vertex '" + token + "'");
    vs->insert(v);
  }
  if (!vs) throw InvalidInput("empty vertex-set file");
  return *vs;
}

void write_vertex_set(std::ostream& out, const CubeVertexSet& vs) {
  out << vs.n() << '\n';
  for (Vertex v : vs.vertices()) {
    for (unsigned i = 0; i < vs.n(); ++i) out << ((v >> i & 1u) ? '1' : '0');
    out << '\n';
  }
}

CubeVertexSet load_vertex_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open vertex-set file " + path.string());
  return read_vertex_set(in);
}

std::vector<Subcube> enumerate_subcubes(unsigned n, unsigned d) {
  if (d > n) throw InvalidInput("subcube dimension exceeds cube dimension");
  if (n > kMaxCubeDimension) throw ResourceRefusal("cube dimension too large to enumerate subcubes");
  std::vector<Subcube> out;
  out.reserve(binom(n, d) << (n - d));
  const Vertex all = n == 64 ? ~Vertex{0} : (Vertex{1} << n) - 1;
  for_each_combination(n, d, [&](std::span<const Element> q) {
    const Vertex free = to_mask(q);
    const Vertex rest = all & ~free;
    Vertex sub = 0;
    do {
      out.push_back(Subcube{sub, free});
      sub = (sub - rest) & rest;
    } while (sub != 0);
    return true;
  });
  return out;
}

std::vector<Subcube> enumerate_middle_subcubes(unsigned n, unsigned dim) {
  if (n % 2 != 0) throw InvalidInput("middle subcubes need an even cube dimension");
  if (dim % 2 != 0) throw InvalidInput("middle subcubes have even dimension 2d");
  if (dim > n) throw InvalidInput("subcube dimension exceeds cube dimension");
  const unsigned half_dim = dim / 2;
  const unsigned stem_size = n / 2 - half_dim;
  std::vector<Subcube> out;
  out.reserve(binom(n, stem_size) * binom(n - stem_size, dim));
  std::vector<Element> outside;
  for_each_combination(n, stem_size, [&](std::span<const Element> stem) {
    const Vertex fixed = to_mask(stem);
    outside.clear();
    for (Element e = 0; e < n; ++e)
      if (!(fixed >> e & 1u)) outside.push_back(e);
    for_each_combination(static_cast<unsigned>(outside.size()), dim, [&](std::span<const Element> idx) {
      Vertex free = 0;
      for (Element i : idx) free |= Vertex{1} << outside[i];
      out.push_back(Subcube{fixed, free});
      return true;
    });
    return true;
  });
  return out;
}

TransversalCheck is_transversal(const CubeVertexSet& vs, std::span<const Subcube> cubes) {
  for (const Subcube& cube : cubes) {
    bool met = false;
    Vertex sub = 0;
    do {
      if (vs.contains(cube.fixed_ones | sub)) {
        met = true;
        break;
      }
      sub = (sub - cube.free) & cube.free;
    } while (sub != 0);
    if (!met) return TransversalCheck{false, cube};
  }
  return TransversalCheck{};
}

TransversalInstance transversal_instance(unsigned n, unsigned d, bool middle_only, bool restrict_to_middle_layer) {
  if (restrict_to_middle_layer && !middle_only)
    throw InvalidInput("restricting to the middle layer requires middle subcubes");
  if (restrict_to_middle_layer ? n > kMaxMiddleLayerTransversal : n > kMaxTransversalCube)
    throw ResourceRefusal("transversal instance on Q_" + std::to_string(n) + " exceeds the desk limit");
  const std::vector<Subcube> cubes = middle_only ? enumerate_middle_subcubes(n, d) : enumerate_subcubes(n, d);

  TransversalInstance inst;
  std::vector<std::int64_t> item_of(std::size_t{1} << n, -1);
  std::vector<std::vector<Item>> orbits;
  if (restrict_to_middle_layer) {
    for_each_combination(n, n / 2, [&](std::span<const Element> s) {
      item_of[to_mask(s)] = static_cast<std::int64_t>(inst.item_vertices.size());
      inst.item_vertices.push_back(to_mask(s));
      return true;
    });
  } else {
    for (Vertex v = 0; v < (Vertex{1} << n); ++v) {
      item_of[v] = static_cast<std::int64_t>(v);
      inst.item_vertices.push_back(v);
    }
  }

  std::vector<std::vector<Item>> constraints;
  constraints.reserve(cubes.size());
  for (const Subcube& cube : cubes) {
    std::vector<Item> c;
    for (Vertex v : cube.vertices())
      if (item_of[v] >= 0) c.push_back(static_cast<Item>(item_of[v]));
    if (c.empty()) throw Infeasible("a subcube has no allowed vertex; no transversal exists");
    constraints.push_back(std::move(c));
  }
  inst.system = ConstraintSystem(inst.item_vertices.size(), std::move(constraints));

  std::vector<std::vector<Element>> labels;
  for (Vertex v : inst.item_vertices) labels.push_back(from_mask(v));
  inst.system.set_labels(std::move(labels));

  if (middle_only) {
    // Coordinate permutations fix every layer and the middle-cube family.
    std::vector<std::vector<Item>> by_layer(n + 1);
    for (Item i = 0; i < inst.item_vertices.size(); ++i)
      by_layer[std::popcount(inst.item_vertices[i])].push_back(i);
    for (auto& layer : by_layer)
      if (!layer.empty()) orbits.push_back(std::move(layer));
  } else {
    // The hyperoctahedral group is transitive on vertices.
    std::vector<Item> all(inst.item_vertices.size());
    for (Item i = 0; i < all.size(); ++i) all[i] = i;
    orbits.push_back(std::move(all));
  }
  inst.system.set_item_orbits(std::move(orbits));
  return inst;
}

SearchResult min_subcube_transversal(unsigned n, unsigned d, bool middle_only, bool restrict_to_middle_layer,
                                     const SolverConfig& cfg) {
  return solve_min_transversal(transversal_instance(n, d, middle_only, restrict_to_middle_layer).system, cfg);
}

SetFamily link(const SetFamily& family, std::span<const Element> removed) {
  std::vector<Element> r_set(removed.begin(), removed.end());
  std::sort(r_set.begin(), r_set.end());
  if (std::adjacent_find(r_set.begin(), r_set.end()) != r_set.end()) throw InvalidInput("link set repeats an element");
  if (!r_set.empty() && r_set.back() >= family.n()) throw InvalidInput("link set leaves the ground set");
  if (r_set.size() > family.r()) throw InvalidInput("link set larger than the family uniformity");

  const unsigned k = static_cast<unsigned>(r_set.size());
  std::vector<std::int64_t> relabeled(family.n(), -1);
  for (Element e = 0, next = 0; e < family.n(); ++e)
    if (!std::binary_search(r_set.begin(), r_set.end(), e)) relabeled[e] = next++;

  SetFamily out(family.n() - k, family.r() - k);
  std::vector<Element> member(family.r());
  std::vector<Element> rest;
  family.for_each_rank([&](Rank rank) {
    colex_unrank_into(rank, family.r(), member);
    if (!std::includes(member.begin(), member.end(), r_set.begin(), r_set.end())) return;
    rest.clear();
    for (Element e : member)
      if (relabeled[e] >= 0) rest.push_back(static_cast<Element>(relabeled[e]));
    out.insert(rest);
  });
  return out;
}

CorrespondenceReport transversal_daisy_correspondence(unsigned n, unsigned dim, const SolverConfig& cfg) {
  if (n % 2 != 0) throw InvalidInput("the correspondence needs an even cube dimension");
  if (n > kMaxMiddleLayerTransversal) throw ResourceRefusal("correspondence check limited to n <= 8");
  if (dim % 2 != 0 || dim == 0) throw InvalidInput("middle subcubes have even positive dimension");
  CorrespondenceReport report;
  report.n = n;
  report.dim = dim;
  const auto pattern = DaisyPattern::make(n / 2, dim, dim / 2);
  const std::vector<Subcube> cubes = enumerate_middle_subcubes(n, dim);
  const std::vector<DaisyInstance> daisies = enumerate_daisies(n, pattern);
  report.cube_count = cubes.size();
  report.daisy_count = daisies.size();
  report.layer_size = binom(n, n / 2);

  // Slice of each cube on the middle layer, as colex ranks.
  std::vector<std::vector<Rank>> slices;
  for (const Subcube& cube : cubes) {
    std::vector<Rank> slice;
    for (Vertex v : cube.vertices())
      if (static_cast<unsigned>(std::popcount(v)) == n / 2) slice.push_back(colex_rank(from_mask(v)));
    std::sort(slice.begin(), slice.end());
    slices.push_back(std::move(slice));
  }
  report.slices_match = cubes.size() == daisies.size();
  for (std::size_t i = 0; report.slices_match && i < cubes.size(); ++i) {
    std::vector<Rank> petals = daisies[i].petal_ranks;
    std::sort(petals.begin(), petals.end());
    report.slices_match = petals == slices[i];
  }

  const auto transversal = min_subcube_transversal(n, dim, true, true, cfg);
  const auto ex = solve_max_avoiding(build_daisy_constraints(n, pattern), cfg);
  report.min_transversal = transversal.objective;
  report.ex_value = ex.objective;
  report.solves_exact = transversal.status == SearchStatus::exact && ex.status == SearchStatus::exact;
  report.identity_holds = report.solves_exact && report.min_transversal + report.ex_value == report.layer_size;

  // Family-level bijection: cube slices from vertex arithmetic, petals from the
  // daisy generator.
  const std::size_t m = report.layer_size;
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  std::vector<Bits> slice_bits;
  std::vector<Bits> petal_bits;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    Bits s(m);
    for (Rank r : slices[i]) s.set(r);
    slice_bits.push_back(std::move(s));
    Bits p(m);
    for (Rank r : daisies[i].petal_ranks) p.set(r);
    petal_bits.push_back(std::move(p));
  }
  const auto check = [&](const Bits& family) {
    const bool meets_all =
        std::all_of(slice_bits.begin(), slice_bits.end(), [&](const Bits& s) { return s.intersects(family); });
    const Bits rest = ~family;
    const bool daisy_free =
        std::none_of(petal_bits.begin(), petal_bits.end(), [&](const Bits& p) { return p.is_subset_of(rest); });
    return meets_all == daisy_free;
  };

  report.bijection_holds = true;
  if (m <= 20) {
    report.exhaustive = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      Bits family(m, mask);
      ++report.families_checked;
      if (!check(family)) {
        report.bijection_holds = false;
        break;
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 10'000; ++trial) {
      Bits family(m);
      for (std::size_t i = 0; i < m; ++i) family[i] = coin(rng);
      ++report.families_checked;
      if (!check(family)) {
        report.bijection_holds = false;
        break;
      }
    }
  }
  return report;
}

CubeMax max_points_in_some_dcube(const CubeVertexSet& vs, unsigned d) {
  if (d > vs.n()) throw InvalidInput("subcube dimension exceeds cube dimension");
  CubeMax best;
  bool first = true;
  for (const Subcube& cube : enumerate_subcubes(vs.n(), d)) {
    std::uint64_t count = 0;
    Vertex sub = 0;
    do {
      count += vs.contains(cube.fixed_ones | sub) ? 1 : 0;
      sub = (sub - cube.free) & cube.free;
    } while (sub != 0);
    if (first || count > best.count) {
      best = CubeMax{count, cube};
      first = false;
    }
  }
  return best;
}

namespace {

unsigned ceil_log2(unsigned x) {
  unsigned bits = 0;
  while ((1u << bits) < x) ++bits;
  return bits;
}

}  // namespace

TdTable td_evidence_table(unsigned d, unsigned n_max, const SolverConfig& cfg) {
  if (d == 0) throw InvalidInput("t_d needs d >= 1");
  TdTable table;
  table.d = d;
  const std::string problem = "t_d:d=" + std::to_string(d);
  const Rational upper(1, d + 1);
  const std::int64_t lower_num = ceil_log2(d);
  const Rational lower(lower_num, std::int64_t{1} << (d + 2));

  for (unsigned n = d; n <= n_max; ++n) {
    if (n > kMaxTransversalCube) {
      table.notes.push_back("n=" + std::to_string(n) + " skipped: Q_n exceeds the desk limit");
      continue;
    }
    const auto result = min_subcube_transversal(n, d, false, false, cfg);
    DensityRecord row;
    row.problem = problem;
    row.n = n;
    row.value = result.objective;
    row.is_exact = result.status == SearchStatus::exact;
    row.ratio = Rational(static_cast<std::int64_t>(result.objective), std::int64_t{1} << n);
    row.bounds.push_back(NamedBound{"upper_layered_limit", BoundKind::density_upper, upper});
    if (d >= 2 && n >= d + 2) row.bounds.push_back(NamedBound{"lower_small_cube_averaged", BoundKind::density_lower, lower});
    table.records.push_back(std::move(row));
  }

  const DensityRecord* prev = nullptr;
  for (const auto& row : table.records) {
    if (!row.is_exact) continue;
    if (prev != nullptr && row.ratio < prev->ratio) table.nondecreasing = false;
    prev = &row;
  }

  if (d + 2 <= kMaxTransversalCube) {
    const auto small = min_subcube_transversal(d + 2, d, false, false, cfg);
    SmallCubeRow acs;
    acs.d = d;
    acs.exact_minimum = small.objective;
    acs.log_bound = ceil_log2(d);
    acs.holds = small.status == SearchStatus::exact && acs.exact_minimum >= acs.log_bound;
    table.small_cube = acs;
  } else {
    table.notes.push_back("Q_" + std::to_string(d + 2) + " small-cube row skipped: exceeds the desk limit");
  }
  return table;
}

}  // namespace daisy
