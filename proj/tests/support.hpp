#pragma once

// Test corpus and brute-force oracles. Oracles work on raw tables only and
// never call the library operations they are compared against.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lemod/bits.hpp"
#include "lemod/models.hpp"

namespace lemod::testing {

struct NamedStructure {
  std::string label;
  Structure s;
};

inline const Structure& z12() {
  static const Structure s = generate_submodule_lattice(12);
  return s;
}

// Index of the element displayed as `name`; -1 when absent.
inline int element(const LeModule& m, const std::string& name) {
  const auto& ns = m.names();
  const auto it = std::find(ns.begin(), ns.end(), name);
  return it == ns.end() ? -1 : static_cast<int>(it - ns.begin());
}

constexpr int kRandomSeeds = 60;

// Submodule lattices of Z/nZ (n = 2..30), chains over small rings, and
// random instances (ring <= 16, module <= 8) with fixed seeds.
inline std::vector<NamedStructure> corpus() {
  std::vector<NamedStructure> out;
  for (int n = 2; n <= 30; ++n) out.push_back({"lattice-" + std::to_string(n), generate_submodule_lattice(n)});
  const int chains[][3] = {{2, 0, 2}, {4, 2, 3}, {6, 2, 4}, {6, 3, 3}, {12, 3, 5}, {9, 3, 2}, {5, 0, 3}};
  for (const auto& c : chains) {
    out.push_back({"chain-" + std::to_string(c[0]) + "-" + std::to_string(c[1]) + "-" + std::to_string(c[2]),
                   generate_chain(c[0], c[1], c[2])});
  }
  for (int seed = 1; seed <= kRandomSeeds; ++seed) {
    out.push_back({"random-" + std::to_string(seed), generate_random(static_cast<std::uint64_t>(seed), 16, 8)});
  }
  return out;
}

namespace oracle {

// Raw-table views -----------------------------------------------------------

struct RingView {
  const RawRing& r;
  int add(int a, int b) const { return r.add[a][b]; }
  int mul(int a, int b) const { return r.mul[a][b]; }
  int size() const { return r.size; }
};

struct ModuleView {
  const RawModule& m;
  int size() const { return m.size; }
  bool leq(int x, int y) const { return m.leq[x][y]; }
  int add(int x, int y) const { return m.add[x][y]; }
  int act(int r, int x) const { return m.action[r][x]; }

  // Least upper bound by scanning upper bounds.
  int join(Mask xs) const {
    for (int u = 0; u < size(); ++u) {
      bool upper = true;
      for_each_bit(xs, [&](int x) { upper = upper && leq(x, u); });
      if (!upper) continue;
      bool least = true;
      for (int v = 0; v < size() && least; ++v) {
        bool vu = true;
        for_each_bit(xs, [&](int x) { vu = vu && leq(x, v); });
        if (vu && !leq(u, v)) least = false;
      }
      if (least) return u;
    }
    return -1;
  }
  int meet(Mask xs) const {
    for (int l = 0; l < size(); ++l) {
      bool lower = true;
      for_each_bit(xs, [&](int x) { lower = lower && leq(l, x); });
      if (!lower) continue;
      bool greatest = true;
      for (int v = 0; v < size() && greatest; ++v) {
        bool vl = true;
        for_each_bit(xs, [&](int x) { vl = vl && leq(v, x); });
        if (vl && !leq(v, l)) greatest = false;
      }
      if (greatest) return l;
    }
    return -1;
  }
};

// Ring side -----------------------------------------------------------------

inline bool is_ideal(const RingView& R, Mask s) {
  if (!has(s, R.r.zero)) return false;
  for (int a = 0; a < R.size(); ++a) {
    if (!has(s, a)) continue;
    for (int b = 0; b < R.size(); ++b) {
      if (has(s, b) && !has(s, R.add(a, b))) return false;
      if (!has(s, R.mul(a, b))) return false;
    }
  }
  return true;
}

// Every ideal by scanning all subsets; only for rings with <= 16 elements.
// Additive closure plus absorption suffices in a finite ring.
inline std::vector<Mask> ideals(const RawRing& raw) {
  RingView R{raw};
  std::vector<Mask> out;
  for (Mask s = 1; s <= full_mask(raw.size); ++s) {
    if (is_ideal(R, s)) out.push_back(s);
  }
  return out;
}

inline Mask radical(const RawRing& raw, Mask ideal) {
  RingView R{raw};
  Mask out = 0;
  for (int a = 0; a < R.size(); ++a) {
    int p = a;
    for (int e = 1; e <= R.size() + 1; ++e, p = R.mul(p, a)) {
      if (has(ideal, p)) {
        out |= bit(a);
        break;
      }
    }
  }
  return out;
}

inline bool is_prime(const RawRing& raw, Mask p) {
  RingView R{raw};
  if (p == full_mask(R.size())) return false;
  for (int a = 0; a < R.size(); ++a) {
    for (int b = 0; b < R.size(); ++b) {
      if (has(p, R.mul(a, b)) && !has(p, a) && !has(p, b)) return false;
    }
  }
  return true;
}

inline bool is_primary(const RawRing& raw, Mask q) {
  RingView R{raw};
  if (q == full_mask(R.size())) return false;
  const Mask rad = radical(raw, q);
  for (int a = 0; a < R.size(); ++a) {
    for (int b = 0; b < R.size(); ++b) {
      if (has(q, R.mul(a, b)) && !has(q, b) && !has(rad, a)) return false;
    }
  }
  return true;
}

inline std::vector<Mask> minimal_primes_over(const RawRing& raw, Mask i) {
  std::vector<Mask> primes;
  for (Mask p : ideals(raw)) {
    if (is_prime(raw, p) && subset_of(i, p)) primes.push_back(p);
  }
  std::vector<Mask> out;
  for (Mask p : primes) {
    const bool minimal = std::none_of(primes.begin(), primes.end(), [&](Mask q) { return q != p && subset_of(q, p); });
    if (minimal) out.push_back(p);
  }
  return out;
}

// Module side ---------------------------------------------------------------

inline bool is_submodule_element(const ModuleView& M, int ring_size, int n) {
  if (!M.leq(M.add(n, n), n)) return false;
  for (int r = 0; r < ring_size; ++r) {
    if (!M.leq(M.act(r, n), n)) return false;
  }
  return true;
}

inline Mask transporter(const ModuleView& M, int ring_size, int l, int n) {
  Mask out = 0;
  for (int r = 0; r < ring_size; ++r) {
    if (M.leq(M.act(r, n), l)) out |= bit(r);
  }
  return out;
}

// Join of every finite sum a1.n + ... + ak.n with a_i in A, built level by
// level: sums of length j+1 are sums of length j plus one generator.
inline int ideal_action(const ModuleView& M, Mask a, int n) {
  Mask gens = 0;
  for_each_bit(a, [&](int r) { gens |= bit(M.act(r, n)); });
  Mask sums = gens;
  for (int len = 1; len < M.size(); ++len) {
    Mask next = sums;
    for_each_bit(sums, [&](int s) { for_each_bit(gens, [&](int g) { next |= bit(M.add(s, g)); }); });
    if (next == sums) break;
    sums = next;
  }
  return M.join(sums);
}

// Definition: proper, and a.x <= n implies x <= n or a^m.e <= n for some m.
inline bool is_primary_element(const ModuleView& M, const RingView& R, int n) {
  const int top = M.m.top;
  if (n == top) return false;
  for (int a = 0; a < R.size(); ++a) {
    bool power_kills = false;
    int p = a;
    for (int e = 1; e <= R.size() + 1 && !power_kills; ++e, p = R.mul(p, a)) {
      power_kills = M.leq(M.act(p, top), n);
    }
    if (power_kills) continue;
    for (int x = 0; x < M.size(); ++x) {
      if (M.leq(M.act(a, x), n) && !M.leq(x, n)) return false;
    }
  }
  return true;
}

inline bool is_prime_element(const ModuleView& M, const RingView& R, int p) {
  const int top = M.m.top;
  if (p == top) return false;
  for (int r = 0; r < R.size(); ++r) {
    if (M.leq(M.act(r, top), p)) continue;
    for (int x = 0; x < M.size(); ++x) {
      if (M.leq(M.act(r, x), p) && !M.leq(x, p)) return false;
    }
  }
  return true;
}

inline Mask element_radical(const ModuleView& M, const RawRing& raw, int n) {
  return radical(raw, transporter(M, raw.size, n, M.m.top));
}

// Every reduced primary decomposition of n, found by scanning every subset of
// the primary submodule elements above n with no pruning. Each result is the
// ascending list of component indices; the list of results is sorted.
inline std::vector<std::vector<int>> reduced_decompositions(const RawModule& raw_m, const RawRing& raw_r, int n) {
  ModuleView M{raw_m};
  RingView R{raw_r};
  std::vector<int> pool;
  for (int q = 0; q < M.size(); ++q) {
    if (M.leq(n, q) && is_submodule_element(M, R.size(), q) && is_primary_element(M, R, q)) pool.push_back(q);
  }
  std::vector<std::vector<int>> out;
  const Mask subsets = full_mask(static_cast<int>(pool.size()));
  for (Mask s = 1; s <= subsets && s != 0; ++s) {
    Mask comps = 0;
    for_each_bit(s, [&](int i) { comps |= bit(pool[i]); });
    if (M.meet(comps) != n) continue;
    bool reduced = true;
    std::vector<Mask> rads;
    for_each_bit(comps, [&](int q) {
      const Mask rest = comps & ~bit(q);
      const int others = rest == 0 ? M.m.top : M.meet(rest);
      if (M.leq(others, q)) reduced = false;
      const Mask rad = element_radical(M, raw_r, q);
      if (std::find(rads.begin(), rads.end(), rad) != rads.end()) reduced = false;
      rads.push_back(rad);
    });
    if (reduced) out.push_back(bits_of(comps));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

}  // namespace lemod::testing
