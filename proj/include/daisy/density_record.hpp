#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace daisy {

using Rational = boost::rational<std::int64_t>;

enum class BoundKind {
  density_upper,             // ratio <= value
  count_upper,               // value <= bound
  count_lower,               // value >= bound
  density_lower,             // ratio >= value
  density_lower_asymptotic,  // limit only; reported, never checked
};

struct NamedBound {
  std::string name;
  BoundKind kind = BoundKind::density_upper;
  Rational value;

  bool operator==(const NamedBound&) const = default;
};

/// One row of an evidence table.
struct DensityRecord {
  std::string problem;
  unsigned n = 0;
  std::uint64_t value = 0;
  /// False when the solver stopped at its node limit; the value is then a
  /// one-sided bound ("≥" for ex rows).
  bool is_exact = true;
  Rational ratio;
  std::vector<NamedBound> bounds;

  bool operator==(const DensityRecord&) const = default;
};

std::string to_string(BoundKind kind);
BoundKind bound_kind_from_string(const std::string& text);

/// "p/q" (always with a denominator).
std::string rational_string(const Rational& q);
Rational parse_rational(const std::string& text);
/// Six-place decimal, round-half-even. Nonnegative inputs only.
std::string decimal_string(const Rational& q);

}  // namespace daisy
