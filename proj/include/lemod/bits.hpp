#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace lemod {

// Subsets of a structure with at most 64 elements, bit i <=> element i.
using Mask = std::uint64_t;

inline constexpr int kMaxElements = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr bool has(Mask m, int i) { return ((m >> i) & 1u) != 0; }

constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline int count(Mask m) { return std::popcount(m); }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  out.reserve(count(m));
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

}  // namespace lemod
