#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace adf {

// Reproducible generator. std::mt19937_64's output sequence is fixed by the
// standard; the helpers below avoid std distributions, whose algorithms are
// implementation-defined, so a (seed, stream) pair yields the same draws on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  // Uniform on [0, 1) with 53 bits.
  double unit();
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

  // k distinct values from 0..n-1, sorted.
  std::vector<int> sample(int n, int k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace adf
