#include "daisy/constructions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "daisy/binomial.hpp"
#include "daisy/errors.hpp"

namespace daisy {

Partition Partition::even_split(unsigned n, unsigned k) {
  if (k == 0) throw InvalidInput("partition needs at least one class");
  Partition p;
  p.sizes.assign(k, n / k);
  for (unsigned c = 0; c < n % k; ++c) ++p.sizes[c];
  for (unsigned c = 0; c < k; ++c) p.class_of.insert(p.class_of.end(), p.sizes[c], c);
  return p;
}

std::vector<Element> Partition::members(unsigned c) const {
  std::vector<Element> out;
  for (Element e = 0; e < class_of.size(); ++e)
    if (class_of[e] == c) out.push_back(e);
  return out;
}

SetFamily complete_multipartite(unsigned n, unsigned r) {
  if (r == 0 || n < r) throw InvalidInput("complete multipartite family needs 1 <= r <= n");
  const Partition parts = Partition::even_split(n, r);
  SetFamily all_classes(r, r);
  all_classes.insert(Rank{0});
  return blowup(BlowupSpec{all_classes, parts}, n);
}

SetFamily fano_lines() {
  SetFamily f(7, 3);
  for (Element a = 0; a < 7; ++a) {
    std::vector<Element> line{a, (a + 1) % 7, (a + 3) % 7};
    std::sort(line.begin(), line.end());
    f.insert(line);
  }
  return f;
}

SetFamily fano_complement() { return complement_family(fano_lines()); }

SetFamily blowup(const BlowupSpec& spec, unsigned n) {
  const Partition& parts = spec.partition;
  if (parts.class_of.size() != n) throw InvalidInput("partition does not cover the ground set");
  if (parts.class_count() != spec.base.n())
    throw InvalidInput("blow-up base has " + std::to_string(spec.base.n()) + " vertices but the partition has " +
                       std::to_string(parts.class_count()) + " classes");
  const unsigned u = spec.base.r();
  SetFamily out(n, u);
  std::vector<std::vector<Element>> classes(parts.class_count());
  for (unsigned c = 0; c < parts.class_count(); ++c) classes[c] = parts.members(c);

  std::vector<Element> pick(u);
  std::vector<Element> member(u);
  std::vector<std::size_t> digit(u);
  for (const auto& edge : spec.base.members()) {
    const auto cls = edge.elements();
    if (std::any_of(cls.begin(), cls.end(), [&](Element c) { return classes[c].empty(); })) continue;
    std::fill(digit.begin(), digit.end(), 0);
    for (;;) {
      for (unsigned i = 0; i < u; ++i) member[i] = classes[cls[i]][digit[i]];
      std::sort(member.begin(), member.end());
      out.insert(member);
      unsigned i = 0;
      while (i < u && ++digit[i] == classes[cls[i]].size()) digit[i++] = 0;
      if (i == u) break;
    }
  }
  return out;
}

namespace {

// Inserts the level-k construction on [offset, offset + 7^k).
void add_iterated_fano(SetFamily& out, const SetFamily& base, unsigned k, Element offset) {
  if (k == 0) return;
  unsigned block = 1;
  for (unsigned i = 1; i < k; ++i) block *= 7;
  std::vector<Element> member(3);
  for (const auto& edge : base.members()) {
    const auto cls = edge.elements();
    for (Element a = 0; a < block; ++a)
      for (Element b = 0; b < block; ++b)
        for (Element c = 0; c < block; ++c) {
          // Classes are contiguous and increasing, so the triple is sorted.
          member = {offset + cls[0] * block + a, offset + cls[1] * block + b, offset + cls[2] * block + c};
          out.insert(member);
        }
  }
  for (Element cls = 0; cls < 7; ++cls) add_iterated_fano(out, base, k - 1, offset + cls * block);
}

}  // namespace

SetFamily iterated_fano(unsigned k) {
  if (k == 0) throw InvalidInput("iterated Fano construction needs k >= 1");
  unsigned n = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (n > kMaxGround / 7) throw ResourceRefusal("iterated Fano construction beyond the supported ground size");
    n *= 7;
  }
  SetFamily out(n, 3);
  add_iterated_fano(out, fano_complement(), k, 0);
  return out;
}

SetFamily parity_family(unsigned n, unsigned k, unsigned r, unsigned delta) {
  if (k < 2) throw InvalidInput("parity family needs k >= 2 classes");
  if (n < r) throw InvalidInput("parity family needs n >= r");
  if (delta < 1) throw InvalidInput("parity family needs delta >= 1");
  const Partition parts = Partition::even_split(n, k);
  SetFamily out(n, r);
  std::vector<unsigned> profile(k);
  // |A ∩ C_j| within delta of r/k, compared as k*|A ∩ C_j| against r ± k*delta.
  const auto in_window = [&](unsigned a) {
    const long long scaled = static_cast<long long>(a) * k;
    return scaled >= static_cast<long long>(r) - static_cast<long long>(k) * delta &&
           scaled <= static_cast<long long>(r) + static_cast<long long>(k) * delta;
  };
  for_each_combination(n, r, [&](std::span<const Element> s) {
    std::fill(profile.begin(), profile.end(), 0);
    for (Element e : s) ++profile[parts.class_of[e]];
    for (unsigned j = 0; j < k; ++j) {
      if (!in_window(profile[j])) return true;
      const bool want_odd = (r % 2 == 1) && j == k - 1;
      if ((profile[j] % 2 == 1) != want_odd) return true;
    }
    out.insert(colex_rank(s));
    return true;
  });
  return out;
}

WindowCount max_members_in_window(const SetFamily& f, unsigned w) {
  if (w < f.r()) throw InvalidInput("window smaller than the family uniformity");
  if (w > f.n()) throw InvalidInput("window larger than the ground set");
  if (binom(f.n(), w) > kMaxWindows)
    throw ResourceRefusal("scanning " + std::to_string(binom(f.n(), w)) + " windows exceeds the desk limit");
  WindowCount best;
  bool first = true;
  std::vector<Element> sub(f.r());
  for_each_combination(f.n(), w, [&](std::span<const Element> window) {
    std::uint64_t count = 0;
    for_each_combination(w, f.r(), [&](std::span<const Element> idx) {
      for (unsigned i = 0; i < f.r(); ++i) sub[i] = window[idx[i]];
      count += f.contains(colex_rank(sub)) ? 1 : 0;
      return true;
    });
    if (first || count > best.count) {
      best.count = count;
      best.window.assign(window.begin(), window.end());
      first = false;
    }
    return true;
  });
  return best;
}

CubeVertexSet layered_transversal(unsigned n, unsigned d, unsigned offset) {
  if (offset > d) throw InvalidInput("layer offset must lie in [0, d]");
  CubeVertexSet out(n);
  const Vertex total = Vertex{1} << n;
  for (Vertex v = 0; v < total; ++v)
    if (static_cast<unsigned>(std::popcount(v)) % (d + 1) == offset) out.insert(v);
  return out;
}

}  // namespace daisy
