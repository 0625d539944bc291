#include "daisy/binomial.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace daisy {
namespace {

using Table = std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1>;

constexpr Table make_table() {
  Table t{};
  for (unsigned n = 0; n <= kMaxGround; ++n) {
    t[n][0] = 1;
    for (unsigned k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr Table kPascal = make_table();

}  // namespace

std::uint64_t binom(unsigned n, unsigned k) {
  if (n > kMaxGround)
    throw std::overflow_error("binom: ground size " + std::to_string(n) + " exceeds table limit " +
                              std::to_string(kMaxGround));
  if (k > n) return 0;
  return kPascal[n][k];
}

}  // namespace daisy
