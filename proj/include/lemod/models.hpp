#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lemod/finite_ring.hpp"
#include "lemod/le_module.hpp"

namespace lemod {

/// A validated ring together with a validated le-module over it.
struct Structure {
  RingPtr ring;
  ModulePtr module;
};

/// Z/nZ acting on the lattice of its own submodules: one element <d> per
/// divisor d of n (ascending, with <n> displayed as <0>), ordered by reverse
/// divisibility, <a> + <b> = <gcd(a,b)>, r.<d> = <gcd(n, r d)>.
Structure generate_submodule_lattice(int n, int ring_cap = kDefaultRingCap);
RawModule submodule_lattice_tables(int n);

/// Chain c0 < c1 < ... < c(length-1) with + = max over Z/nZ, where r acts as
/// the identity when r is outside the prime ideal (p) and as 0 inside it.
Structure generate_chain(int n, int p, int length, int ring_cap = kDefaultRingCap);

/// Random valid instance, reproducible from `seed`. The ring is drawn from
/// Z/nZ, products Z/aZ x Z/bZ and quotients Z/mZ[x]/(f) with f monic; the
/// module is a sub-structure (closed under union, elementwise sum and the
/// action) of the zero-containing subsets of a small R-module R/I or
/// R/I + R/J. Throws CapacityError after exhausting the sampling budget.
Structure generate_random(std::uint64_t seed, int max_ring, int max_module);

RawRing product_ring_tables(const RawRing& a, const RawRing& b);
/// Z/mZ[x]/(x^d + c[d-1] x^(d-1) + ... + c[0]) with d = c.size().
RawRing polynomial_quotient_tables(int modulus, std::span<const int> low_coefficients);

}  // namespace lemod
