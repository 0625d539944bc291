#pragma once

#include <cstdint>

namespace daisy {

inline constexpr unsigned kMaxGround = 64;

/// binom(n, k) from a precomputed Pascal table. Zero when k > n.
/// Throws std::overflow_error for n > kMaxGround.
std::uint64_t binom(unsigned n, unsigned k);

}  // namespace daisy
