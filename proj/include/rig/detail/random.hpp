#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

// Small deterministic randomness kit. std::uniform_*_distribution and
// std::sample leave their draw sequences implementation-defined, so seeded
// outputs would not be reproducible across standard libraries; these helpers
// consume mt19937_64 words in a fixed way instead.
namespace rig::detail {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1), 53 bits
}

// Unbiased integer in [0, bound) by masked rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
  std::uint64_t mask = ~0ull >> std::countl_zero(bound | 1);
  for (;;) {
    std::uint64_t x = rng() & mask;
    if (x < bound) return x;
  }
}

// k distinct values from [0, n), sorted. Floyd's sampling: the draw count
// depends only on k, not on which values come up.
inline std::vector<int> sample_distinct(std::mt19937_64& rng, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("sample_distinct: bad subset size");
  std::vector<int> out;
  out.reserve(k);
  for (int j = n - k; j < n; ++j) {
    auto t = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
    if (std::find(out.begin(), out.end(), t) == out.end())
      out.push_back(t);
    else
      out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

inline std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = kFnvOffset) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

inline std::uint64_t fnv1a_u64(std::uint64_t value, std::uint64_t h = kFnvOffset) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
  return h;
}

}  // namespace rig::detail
