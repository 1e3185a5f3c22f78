#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace wdn {

// Deterministic random source with a portable draw sequence.
//
// std::mt19937_64's raw output sequence is pinned by the standard, but the
// standard *distributions* are implementation-defined, so every bounded draw
// here is built directly on the raw 64-bit stream:
//   - uniform01()          : (x >> 11) * 2^-53, uniform on [0, 1)
//   - uniform_int(lo, hi)  : Lemire rejection, unbiased, inclusive bounds
//   - sample_distinct(...) : partial Fisher-Yates, k distinct values in
//                            random order
// Identical seeds therefore give identical draw sequences on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1). Never returns 1.0.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [lo, hi], both inclusive. Requires lo <= hi.
  int uniform_int(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi) - lo + 1;
    return lo + static_cast<int>(bounded(range));
  }

  // k distinct integers from [lo, hi] in random order (partial Fisher-Yates).
  // Requires 0 <= k <= hi - lo + 1.
  std::vector<int> sample_distinct(int lo, int hi, int k) {
    const int n = hi - lo + 1;
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = lo + i;
    std::vector<int> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(bounded(static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

  // Derives an independent child seed from (master, index) via SplitMix64.
  // Used to give each run / table cell its own reproducible stream that does
  // not depend on execution order or worker count.
  static std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  // Unbiased integer in [0, range). Lemire's multiply-shift rejection.
  std::uint64_t bounded(std::uint64_t range) {
    if (range <= 1) return 0;
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * range;
    std::uint64_t low = static_cast<std::uint64_t>(m);
    if (low < range) {
      const std::uint64_t threshold = (0 - range) % range;
      while (low < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * range;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  std::mt19937_64 gen_;
};

}  // namespace wdn
