#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lemod/bits.hpp"

namespace lemod {

inline constexpr int kDefaultRingCap = 64;

using Table = std::vector<std::vector<int>>;

/// Unvalidated ring candidate: operation tables over indices 0..size-1.
struct RawRing {
  int size = 0;
  Table add;
  Table mul;
  int zero = 0;
  int one = 0;

  friend bool operator==(const RawRing&, const RawRing&) = default;
};

/// One failed axiom instance. `witness` holds the element indices that
/// instantiate the axiom (in the order the axiom names its variables).
struct Violation {
  std::string axiom;
  std::vector<int> witness;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

class Ideal;
struct RingValidation;

/// Commutative ring with 1 given by dense tables. Only obtainable through
/// validate_ring(), so every instance satisfies the ring axioms. Instances
/// are immutable and pinned in memory (ideals refer back to their ring).
class FiniteRing {
 public:
  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  int size() const { return size_; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  Mask all() const { return full_mask(size_); }

  int add(int a, int b) const { return add_[a * size_ + b]; }
  int mul(int a, int b) const { return mul_[a * size_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  /// a^e for e >= 1.
  int pow(int a, int e) const;
  /// {a^m : m >= 1}, found by iterating powers until a repeat.
  Mask powers(int a) const { return powers_[a]; }

  const RawRing& tables() const { return raw_; }

  /// Every ideal, ascending by member bitset.
  const std::vector<Ideal>& ideals() const { return *ideals_; }

 private:
  explicit FiniteRing(RawRing raw);
  void build_ideals();

  friend RingValidation validate_ring(const RawRing&, int);

  RawRing raw_;
  int size_;
  int zero_;
  int one_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<Mask> powers_;
  std::unique_ptr<std::vector<Ideal>> ideals_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Subset of a ring closed under subtraction and multiplication by ring
/// elements. Holds a non-owning reference: must not outlive its ring.
class Ideal {
 public:
  const FiniteRing& ring() const { return *ring_; }
  Mask members() const { return members_; }
  bool contains(int a) const { return has(members_, a); }
  int size() const { return count(members_); }
  bool is_proper() const { return members_ != ring_->all(); }
  bool is_subset_of(const Ideal& other) const { return subset_of(members_, other.members_); }
  std::vector<int> elements() const { return bits_of(members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }
  /// Canonical order: ascending member bitset.
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) {
    return a.members_ <=> b.members_;
  }

 private:
  Ideal(const FiniteRing& ring, Mask members) : ring_(&ring), members_(members) {}

  friend class FiniteRing;
  friend Ideal ideal_from_members(const FiniteRing&, Mask);
  friend Ideal generate_ideal(const FiniteRing&, Mask);

  const FiniteRing* ring_;
  Mask members_;
};

/// Set containing 1 and closed under multiplication.
class MultClosedSet {
 public:
  const FiniteRing& ring() const { return *ring_; }
  Mask members() const { return members_; }
  bool contains(int a) const { return has(members_, a); }
  std::vector<int> elements() const { return bits_of(members_); }

  friend bool operator==(const MultClosedSet& a, const MultClosedSet& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  MultClosedSet(const FiniteRing& ring, Mask members) : ring_(&ring), members_(members) {}
  friend MultClosedSet mult_closed_set(const FiniteRing&, Mask);

  const FiniteRing* ring_;
  Mask members_;
};

struct RingValidation {
  RingPtr ring;  // null when violations is non-empty
  std::vector<Violation> violations;

  bool ok() const { return ring != nullptr; }
};

/// Checks table shapes (FormatError), the size cap (CapacityError) and then
/// every ring axiom. Reports the first witness per violated axiom.
RingValidation validate_ring(const RawRing& candidate, int max_size = kDefaultRingCap);

/// validate_ring() that throws FormatError listing the violations.
RingPtr make_ring(const RawRing& candidate, int max_size = kDefaultRingCap);

/// Re-evaluates a reported ring violation directly on the raw tables.
bool recheck_ring_violation(const RawRing& candidate, const Violation& v);

/// Tables of Z/nZ (n >= 1).
RawRing zn_tables(int n);

/// Checks ideal invariants; throws UsageError if `members` is not an ideal.
Ideal ideal_from_members(const FiniteRing& ring, Mask members);
/// Smallest ideal containing `generators`.
Ideal generate_ideal(const FiniteRing& ring, Mask generators);
Ideal principal_ideal(const FiniteRing& ring, int a);
Ideal zero_ideal(const FiniteRing& ring);
Ideal unit_ideal(const FiniteRing& ring);

const std::vector<Ideal>& enumerate_ideals(const FiniteRing& ring);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_radical(const Ideal& i);

bool is_prime_ideal(const Ideal& p);
bool is_maximal_ideal(const Ideal& i);
bool is_primary_ideal(const Ideal& i);

/// Inclusion-minimal primes containing `i`, canonical order. Throws
/// UsageError when `i` is the whole ring.
std::vector<Ideal> minimal_primes_over(const Ideal& i);
std::vector<Ideal> prime_ideals(const FiniteRing& ring);

/// Checks the invariants; throws UsageError otherwise.
MultClosedSet mult_closed_set(const FiniteRing& ring, Mask members);
/// R minus the union of the given primes. Throws UsageError on a non-prime.
MultClosedSet complement_of_prime_union(const FiniteRing& ring, std::span<const Ideal> primes);

/// Short display form: "(a)" or "(a,b)" for ideals with one or two
/// generators (smallest indices), otherwise the member list.
std::string ideal_label(const Ideal& i);
/// One or two smallest generators when they exist, otherwise every member.
std::vector<int> ideal_generators(const Ideal& i);
/// Report order: by generator list, so (2) precedes (3) in Z/12Z.
bool display_before(const Ideal& a, const Ideal& b);

}  // namespace lemod
