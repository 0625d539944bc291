#include "daisy/products.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <string>

#include "daisy/binomial.hpp"
#include "daisy/errors.hpp"

namespace daisy {

UniformHypergraph star_product(const UniformHypergraph& f, const UniformHypergraph& g) {
  const unsigned ground = f.ground() + g.ground();
  if (ground > kMaxGround) throw InvalidInput("product ground set exceeds the supported size");
  UniformHypergraph out{SetFamily(ground, f.uniformity() + g.uniformity())};
  std::vector<Element> edge;
  const auto f_edges = f.edges.members();
  const auto g_edges = g.edges.members();
  for (const auto& a : f_edges)
    for (const auto& b : g_edges) {
      edge.assign(a.elements().begin(), a.elements().end());
      for (Element e : b.elements()) edge.push_back(e + f.ground());
      out.edges.insert(edge);
    }
  return out;
}

UniformHypergraph power(const UniformHypergraph& f, unsigned d) {
  if (d == 0) throw InvalidInput("power needs d >= 1");
  UniformHypergraph out = f;
  for (unsigned i = 1; i < d; ++i) out = star_product(out, f);
  return out;
}

ConstraintSystem enumerate_copies(const UniformHypergraph& h, unsigned n) {
  const unsigned m = h.ground();
  const unsigned u = h.uniformity();
  if (m > kMaxPatternVertices)
    throw ResourceRefusal("pattern has " + std::to_string(m) + " vertices; copy enumeration supports at most " +
                          std::to_string(kMaxPatternVertices));
  if (h.edges.empty()) throw InvalidInput("forbidden pattern has no edges");
  if (n < u) throw InvalidInput("ground set smaller than the pattern uniformity");
  const std::uint64_t items = binom(n, u);

  const auto edges = h.edges.members();
  std::vector<unsigned> degree(m, 0);
  for (const auto& e : edges)
    for (Element v : e.elements()) ++degree[v];
  std::vector<Element> order;
  for (Element v = 0; v < m; ++v)
    if (degree[v] > 0) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return degree[a] > degree[b]; });

  std::set<std::vector<Item>> copies;
  if (n >= m) {
    std::uint64_t injections = 1;
    for (unsigned i = 0; i < order.size(); ++i) injections *= n - i;
    if (injections > kMaxInjections)
      throw ResourceRefusal("copy enumeration needs about " + std::to_string(injections) +
                            " injections, above the desk limit " + std::to_string(kMaxInjections));

    std::vector<Element> image(m, 0);
    std::vector<bool> used(n, false);
    std::vector<Element> mapped(u);
    std::vector<Item> copy;
    const auto emit = [&] {
      copy.clear();
      for (const auto& e : edges) {
        std::size_t i = 0;
        for (Element v : e.elements()) mapped[i++] = image[v];
        std::sort(mapped.begin(), mapped.end());
        copy.push_back(static_cast<Item>(colex_rank(mapped)));
      }
      std::sort(copy.begin(), copy.end());
      copies.insert(copy);
    };
    const auto extend = [&](const auto& self, std::size_t depth) -> void {
      if (depth == order.size()) {
        emit();
        return;
      }
      for (Element target = 0; target < n; ++target) {
        if (used[target]) continue;
        used[target] = true;
        image[order[depth]] = target;
        self(self, depth + 1);
        used[target] = false;
      }
    };
    extend(extend, 0);
  }

  ConstraintSystem cs(items, std::vector<std::vector<Item>>(copies.begin(), copies.end()));
  std::vector<std::vector<Element>> labels;
  labels.reserve(items);
  for (Rank i = 0; i < items; ++i) {
    const auto s = colex_unrank(i, n, u);
    labels.emplace_back(s.elements().begin(), s.elements().end());
  }
  cs.set_labels(std::move(labels));
  std::vector<Item> all(items);
  std::iota(all.begin(), all.end(), Item{0});
  cs.set_item_orbits({std::move(all)});
  return cs;
}

std::string hypergraph_id(const UniformHypergraph& h) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  const auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      hash ^= (x >> (8 * i)) & 0xffu;
      hash *= 0x100000001b3ull;
    }
  };
  mix(h.ground());
  mix(h.uniformity());
  h.edges.for_each_rank([&](Rank r) { mix(r); });
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return "H(m=" + std::to_string(h.ground()) + ",u=" + std::to_string(h.uniformity()) + ")#" + buf;
}

}  // namespace daisy
