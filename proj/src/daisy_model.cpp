#include "daisy/daisy_model.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "daisy/binomial.hpp"
#include "daisy/errors.hpp"

namespace daisy {

DaisyPattern DaisyPattern::make(unsigned r, unsigned s, unsigned t) {
  if (t == 0) throw InvalidInput("daisy petal depth t must be at least 1");
  if (t > s || t > r)
    throw InvalidInput("daisy pattern (" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) +
                       ") needs t <= min(s, r)");
  if (r - t + s > kMaxGround) throw InvalidInput("daisy pattern too large");
  return DaisyPattern{r, s, t};
}

DaisyPattern DaisyPattern::parse(std::string_view text) {
  unsigned values[3] = {0, 0, 0};
  std::size_t field = 0;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (field < 3) {
    auto [next, ec] = std::from_chars(p, end, values[field]);
    if (ec != std::errc{} || next == p) throw InvalidInput("pattern must look like r,s,t; got '" + std::string(text) + "'");
    p = next;
    ++field;
    if (field < 3) {
      if (p == end || *p != ',') throw InvalidInput("pattern must look like r,s,t; got '" + std::string(text) + "'");
      ++p;
    }
  }
  if (p != end) throw InvalidInput("pattern must look like r,s,t; got '" + std::string(text) + "'");
  return make(values[0], values[1], values[2]);
}

std::uint64_t DaisyPattern::petal_count() const { return binom(s, t); }

DaisyInstance instantiate(const DaisyPattern& pattern, std::span<const Element> stem,
                          std::span<const Element> free_set) {
  if (stem.size() != pattern.stem_size())
    throw InvalidInput("daisy stem must have " + std::to_string(pattern.stem_size()) + " elements");
  if (free_set.size() != pattern.s)
    throw InvalidInput("daisy free set must have " + std::to_string(pattern.s) + " elements");
  DaisyInstance inst;
  inst.stem.assign(stem.begin(), stem.end());
  inst.free_set.assign(free_set.begin(), free_set.end());
  std::sort(inst.stem.begin(), inst.stem.end());
  std::sort(inst.free_set.begin(), inst.free_set.end());
  if (std::adjacent_find(inst.stem.begin(), inst.stem.end()) != inst.stem.end() ||
      std::adjacent_find(inst.free_set.begin(), inst.free_set.end()) != inst.free_set.end())
    throw InvalidInput("daisy stem and free set must not repeat elements");
  for (Element e : inst.stem)
    if (std::binary_search(inst.free_set.begin(), inst.free_set.end(), e))
      throw InvalidInput("daisy stem and free set must be disjoint");
  if ((!inst.stem.empty() && inst.stem.back() >= kMaxGround) ||
      (!inst.free_set.empty() && inst.free_set.back() >= kMaxGround))
    throw InvalidInput("daisy element beyond supported ground size");

  for_each_combination(pattern.s, pattern.t, [&](std::span<const Element> idx) {
    std::vector<Element> petal(inst.stem);
    for (Element i : idx) petal.push_back(inst.free_set[i]);
    std::sort(petal.begin(), petal.end());
    inst.petal_ranks.push_back(colex_rank(petal));
    inst.petals.push_back(std::move(petal));
    return true;
  });
  return inst;
}

std::uint64_t daisy_instance_count(unsigned n, const DaisyPattern& pattern) {
  if (n < pattern.min_ground()) return 0;
  return binom(n, pattern.stem_size()) * binom(n - pattern.stem_size(), pattern.s);
}

std::vector<DaisyInstance> enumerate_daisies(unsigned n, const DaisyPattern& pattern) {
  const auto count = daisy_instance_count(n, pattern);
  if (count > kMaxMaterializedDaisies)
    throw ResourceRefusal("enumerating " + std::to_string(count) + " daisy instances exceeds the desk limit");
  std::vector<DaisyInstance> out;
  out.reserve(count);
  for_each_daisy(n, pattern, [&](auto stem, auto free_set, auto) {
    out.push_back(instantiate(pattern, stem, free_set));
    return true;
  });
  return out;
}

namespace {

void require_uniformity(const SetFamily& f, const DaisyPattern& pattern) {
  if (f.r() != pattern.r)
    throw InvalidInput("family is " + std::to_string(f.r()) + "-uniform but the pattern has r = " +
                       std::to_string(pattern.r));
}

bool all_present(const SetFamily& f, std::span<const Rank> ranks) {
  for (Rank rank : ranks)
    if (!f.contains(rank)) return false;
  return true;
}

}  // namespace

std::optional<DaisyInstance> find_daisy(const SetFamily& f, const DaisyPattern& pattern) {
  require_uniformity(f, pattern);
  std::optional<DaisyInstance> hit;
  for_each_daisy(f.n(), pattern, [&](auto stem, auto free_set, auto ranks) {
    if (!all_present(f, ranks)) return true;
    hit = instantiate(pattern, stem, free_set);
    return false;
  });
  return hit;
}

bool is_daisy_free(const SetFamily& f, const DaisyPattern& pattern) { return !find_daisy(f, pattern).has_value(); }

std::uint64_t daisy_count(const SetFamily& f, const DaisyPattern& pattern) {
  require_uniformity(f, pattern);
  std::uint64_t count = 0;
  for_each_daisy(f.n(), pattern, [&](auto, auto, auto ranks) {
    if (all_present(f, ranks)) ++count;
    return true;
  });
  return count;
}

namespace {

std::optional<DaisyInstance> find_covering_instance(unsigned n, const DaisyPattern& pattern,
                                                    const std::vector<Rank>& needed) {
  std::optional<DaisyInstance> hit;
  for_each_daisy(n, pattern, [&](auto stem, auto free_set, auto ranks) {
    for (Rank want : needed)
      if (std::find(ranks.begin(), ranks.end(), want) == ranks.end()) return true;
    hit = instantiate(pattern, stem, free_set);
    return false;
  });
  return hit;
}

}  // namespace

ContainmentWitness containment_check(const DaisyPattern& pattern, std::optional<unsigned> n) {
  ContainmentWitness out;
  out.n = n.value_or(pattern.min_ground() + 1);
  if (out.n < pattern.min_ground() + 1)
    throw InvalidInput("containment check needs a ground set of at least r-t+s+1 points");
  const auto first = enumerate_daisies(pattern.min_ground(), pattern);
  out.base = first.front();

  const auto wider = DaisyPattern::make(pattern.r, pattern.s + 1, pattern.t);
  out.wider = find_covering_instance(out.n, wider, out.base.petal_ranks);
  if (pattern.t + 1 <= pattern.r) {
    const auto deeper = DaisyPattern::make(pattern.r, pattern.s + 1, pattern.t + 1);
    out.deeper = find_covering_instance(out.n, deeper, out.base.petal_ranks);
  }
  return out;
}

}  // namespace daisy
