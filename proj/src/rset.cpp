#include "daisy/rset.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "daisy/binomial.hpp"
#include "daisy/errors.hpp"

namespace daisy {

RSet::RSet(unsigned n, std::vector<Element> elements) : n_(n), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] >= n_)
      throw InvalidInput("element " + std::to_string(elements_[i]) + " outside ground set of size " +
                         std::to_string(n_));
    if (i > 0 && elements_[i - 1] >= elements_[i])
      throw InvalidInput("set elements must be strictly increasing");
  }
}

bool RSet::contains(Element e) const {
  for (Element x : elements_)
    if (x == e) return true;
  return false;
}

std::strong_ordering colex_compare(std::span<const Element> a, std::span<const Element> b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib)
    if (*ia != *ib) return *ia <=> *ib;
  return a.size() <=> b.size();
}

Rank colex_rank(std::span<const Element> sorted) {
  Rank rank = 0;
  for (unsigned i = 0; i < sorted.size(); ++i) rank += binom(sorted[i], i + 1);
  return rank;
}

Rank colex_rank(const RSet& s) { return colex_rank(s.elements()); }

void colex_unrank_into(Rank i, unsigned r, std::span<Element> out) {
  // Largest position first: the element c is the largest with binom(c, pos+1) <= remaining.
  Element c = r == 0 ? 0 : r - 1;
  while (r > 0 && binom(c + 1, r) <= i) ++c;
  for (unsigned pos = r; pos-- > 0;) {
    while (binom(c, pos + 1) > i) --c;
    out[pos] = c;
    i -= binom(c, pos + 1);
    if (c > 0) --c;
  }
}

RSet colex_unrank(Rank i, unsigned n, unsigned r) {
  if (r > n || i >= binom(n, r))
    throw std::out_of_range("colex_unrank: index " + std::to_string(i) + " out of range for binom(" +
                            std::to_string(n) + "," + std::to_string(r) + ")");
  std::vector<Element> elements(r);
  colex_unrank_into(i, r, elements);
  return RSet(n, std::move(elements));
}

bool next_colex(std::span<Element> combo, unsigned n) {
  const std::size_t k = combo.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Element limit = i + 1 < k ? combo[i + 1] : n;
    if (combo[i] + 1 < limit) {
      ++combo[i];
      for (std::size_t j = 0; j < i; ++j) combo[j] = static_cast<Element>(j);
      return true;
    }
  }
  return false;
}

std::uint64_t to_mask(std::span<const Element> elements) {
  std::uint64_t mask = 0;
  for (Element e : elements) mask |= std::uint64_t{1} << e;
  return mask;
}

std::vector<Element> from_mask(std::uint64_t mask) {
  std::vector<Element> out;
  out.reserve(std::popcount(mask));
  while (mask) {
    out.push_back(static_cast<Element>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace daisy
