#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lemod/finite_ring.hpp"
#include "lemod/le_module.hpp"
#include "lemod/primary.hpp"

namespace lemod {

inline constexpr int kDefaultPoolCap = 20;

/// n = q1 ^ ... ^ qk with every qi primary. Components are kept in index
/// order; radicals[i] = Rad(components[i]).
struct PrimaryDecomposition {
  SubmoduleElement target;
  std::vector<SubmoduleElement> components;
  std::vector<Ideal> radicals;
  bool reduced = false;

  std::vector<int> indices() const;
};

/// Checks meet == target and primariness of every component, and computes
/// the radicals and the reduced flag. Throws UsageError otherwise.
PrimaryDecomposition make_decomposition(const SubmoduleElement& target,
                                        std::vector<SubmoduleElement> components);

/// No component redundant and radicals pairwise distinct.
bool is_reduced(const PrimaryDecomposition& d);

struct AssociatedPrimes {
  SubmoduleElement target;
  std::vector<Ideal> primes;  // canonical order
  std::vector<bool> isolated;  // inclusion-minimal among `primes`
};

struct SearchOptions {
  int max_pool = kDefaultPoolCap;
};

/// Primary q with n <= q, index order.
std::vector<SubmoduleElement> primary_elements_above(const SubmoduleElement& n);

/// A reduced decomposition of a proper n, or nullopt when n has none. Takes
/// every primary element above n, drops redundant components in index
/// order, then merges equal-radical groups by their meet.
std::optional<PrimaryDecomposition> find_reduced_decomposition(const SubmoduleElement& n);

/// Every reduced decomposition of a proper n, ordered by component count
/// then component indices. Subsets of the candidate pool are grown in index
/// order and abandoned as soon as a new component leaves the meet unchanged
/// or repeats a radical. Throws CapacityError when the pool exceeds the cap.
std::vector<PrimaryDecomposition> enumerate_reduced_decompositions(const SubmoduleElement& n,
                                                                   const SearchOptions& options = {});

/// Whether every proper submodule element has a primary decomposition. The
/// top element is excluded: a meet of proper elements is never e.
struct LaskerianReport {
  bool holds = true;
  std::optional<SubmoduleElement> counterexample;
  int checked = 0;
};
LaskerianReport is_laskerian(const LeModule& m);

/// Radicals of a reduced decomposition with isolation flags. Throws
/// UsageError on unreduced input.
AssociatedPrimes associated_primes(const PrimaryDecomposition& d);

/// Minimal primes over (n:e).
std::vector<Ideal> minimal_prime_divisors(const SubmoduleElement& n);

/// n_S = join of {x : s.x <= n for some s in S}.
SubmoduleElement s_component(const SubmoduleElement& n, const MultClosedSet& s);

/// q' = join of {x : (n:x) not contained in P}. Throws UsageError when P is
/// not prime.
SubmoduleElement isolated_component_formula(const SubmoduleElement& n, const Ideal& prime);

struct FirstUniquenessReport {
  SubmoduleElement target;
  int decompositions = 0;
  bool radical_sets_agree = true;
  std::vector<Ideal> decomposition_primes;  // from the first decomposition
  std::vector<Ideal> transporter_primes;    // P with (n:x) P-primary for some x not <= n
  std::vector<int> witnesses;               // first such x, parallel to transporter_primes
  bool holds = false;
};

/// Requires at least one reduced decomposition (UsageError otherwise).
FirstUniquenessReport verify_first_uniqueness(const SubmoduleElement& n, const SearchOptions& options = {});

struct SecondUniquenessReport {
  SubmoduleElement target;
  std::vector<Ideal> isolated_set;
  std::vector<int> meets;  // per reduced decomposition
  int s_component = -1;
  bool holds = false;
};

/// For every reduced decomposition, the meet of the components whose radical
/// lies in `isolated_set` (e for the empty set), compared with n_S for
/// S = R minus the union of the set. Throws UsageError when a listed prime
/// is not an isolated prime divisor of n.
SecondUniquenessReport verify_second_uniqueness(const SubmoduleElement& n, std::span<const Ideal> isolated_set,
                                                const SearchOptions& options = {});

/// (n:r) == n.
bool saturation_fixpoint_check(const SubmoduleElement& n, int r);

}  // namespace lemod
