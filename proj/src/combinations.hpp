#pragma once

#include <bit>
#include <cstdint>

#include "adf/errors.hpp"

namespace adf::detail {

// Binomial coefficients up to C(64, k), exact in 64 bits.
class SmallBinomials {
 public:
  SmallBinomials() {
    for (int n = 0; n <= 64; ++n) {
      table_[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        table_[n][k] = table_[n - 1][k - 1] + (k <= n - 1 ? table_[n - 1][k] : 0);
      }
    }
  }
  std::uint64_t operator()(int n, int k) const {
    if (k < 0 || n < 0 || k > n) return 0;
    return table_[n][k];
  }

 private:
  std::uint64_t table_[65][65] = {};
};

inline const SmallBinomials& small_binomials() {
  static const SmallBinomials table;
  return table;
}

// k-subsets of {0..n-1} as bitmasks in increasing numeric (colex) order.
inline std::uint64_t unrank_colex(int n, int k, std::uint64_t rank) {
  const auto& binom = small_binomials();
  std::uint64_t mask = 0;
  int c = n - 1;
  for (int i = k; i >= 1; --i) {
    while (binom(c, i) > rank) --c;
    mask |= std::uint64_t{1} << c;
    rank -= binom(c, i);
    --c;
  }
  return mask;
}

// Gosper's hack; undefined once the last subset has been passed.
inline std::uint64_t next_same_popcount(std::uint64_t mask) {
  const std::uint64_t low = mask & (~mask + 1);
  const std::uint64_t ripple = mask + low;
  return (((ripple ^ mask) >> 2) / low) | ripple;
}

inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace adf::detail
