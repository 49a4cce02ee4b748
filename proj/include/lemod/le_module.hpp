#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lemod/bits.hpp"
#include "lemod/finite_ring.hpp"

namespace lemod {

inline constexpr int kDefaultModuleCap = 64;

using BoolTable = std::vector<std::vector<bool>>;

/// Unvalidated le-module candidate over a ring with `k` elements:
/// leq and add are m x m, action is k x m (action[r][x] = r.x).
struct RawModule {
  int size = 0;
  std::vector<std::string> names;  // empty, or one display name per element
  BoolTable leq;
  Table add;
  int zero = 0;
  int top = 0;
  Table action;

  friend bool operator==(const RawModule&, const RawModule&) = default;
};

struct ModuleValidation;

/// Finite le-module: complete lattice (M, <=) with greatest element `top`,
/// commutative monoid (M, +, zero) and a ring action satisfying (S) and
/// (M1)-(M5). Obtainable only through validate_le_module().
class LeModule {
 public:
  LeModule(const LeModule&) = delete;
  LeModule& operator=(const LeModule&) = delete;

  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  int size() const { return size_; }
  int zero() const { return zero_; }
  int top() const { return top_; }
  Mask all() const { return full_mask(size_); }

  bool leq(int x, int y) const { return has(below_[y], x); }
  int add(int x, int y) const { return add_[x * size_ + y]; }
  int act(int r, int x) const { return action_[r * size_ + x]; }
  int join(int x, int y) const { return join_[x * size_ + y]; }
  int meet(int x, int y) const { return meet_[x * size_ + y]; }

  /// {y : y <= x} and {y : x <= y}.
  Mask down_set(int x) const { return below_[x]; }
  Mask up_set(int x) const { return above_[x]; }

  /// Least upper bound / greatest lower bound of a non-empty set; throws
  /// UsageError on the empty set.
  int join(Mask xs) const;
  int meet(Mask xs) const;
  int join(std::span<const int> xs) const;
  int meet(std::span<const int> xs) const;

  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  const RawModule& tables() const { return raw_; }

 private:
  LeModule(RawModule raw, RingPtr ring);
  friend ModuleValidation validate_le_module(const RawModule&, RingPtr, int);

  RawModule raw_;
  RingPtr ring_;
  int size_;
  int zero_;
  int top_;
  std::vector<Mask> below_;
  std::vector<Mask> above_;
  std::vector<int> add_;
  std::vector<int> action_;
  std::vector<int> join_;
  std::vector<int> meet_;
  std::vector<std::string> names_;
};

using ModulePtr = std::shared_ptr<const LeModule>;

struct ModuleValidation {
  ModulePtr module;  // null when violations is non-empty
  std::vector<Violation> violations;

  bool ok() const { return module != nullptr; }
};

/// Shape errors throw FormatError, an oversized module throws CapacityError.
/// Axioms are then checked in a fixed order (order, lattice, monoid, (S),
/// (M1)-(M5)); the first witness of each violated axiom is reported. Lattice
/// axioms are skipped when the order is broken, and (S)/(M5) when joins do
/// not exist.
ModuleValidation validate_le_module(const RawModule& candidate, RingPtr ring,
                                    int max_size = kDefaultModuleCap);

/// validate_le_module() that throws FormatError naming the violated axioms.
ModulePtr make_le_module(const RawModule& candidate, RingPtr ring, int max_size = kDefaultModuleCap);

/// Re-evaluates a reported module violation on the raw tables, computing
/// joins by scanning the order rather than from precomputed tables.
bool recheck_module_violation(const RawModule& candidate, const FiniteRing& ring, const Violation& v);

/// Element n with n + n <= n and r.n <= n for every ring element r. Holds a
/// non-owning module reference.
class SubmoduleElement {
 public:
  const LeModule& module() const { return *module_; }
  int index() const { return index_; }
  bool is_proper() const { return index_ != module_->top(); }

  friend bool operator==(const SubmoduleElement& a, const SubmoduleElement& b) {
    return a.module_ == b.module_ && a.index_ == b.index_;
  }
  friend auto operator<=>(const SubmoduleElement& a, const SubmoduleElement& b) {
    return a.index_ <=> b.index_;
  }

 private:
  SubmoduleElement(const LeModule& m, int index) : module_(&m), index_(index) {}
  friend std::optional<SubmoduleElement> as_submodule_element(const LeModule&, int);

  const LeModule* module_;
  int index_;
};

/// Why an element fails to be a submodule element: "n+n" (witness ring
/// element unused, -1) or "r.n" with the offending ring element.
struct SubmoduleWitness {
  std::string law;
  int ring_element = -1;
};

std::optional<SubmoduleWitness> submodule_violation(const LeModule& m, int x);
bool is_submodule_element(const LeModule& m, int x);
std::optional<SubmoduleElement> as_submodule_element(const LeModule& m, int x);
/// Throws UsageError when x is not a submodule element.
SubmoduleElement submodule_element(const LeModule& m, int x);
/// All submodule elements in index order.
std::vector<SubmoduleElement> submodule_elements(const LeModule& m);

/// An: join of the additive closure of {a.n : a in A}.
SubmoduleElement ideal_action(const LeModule& m, const Ideal& a, int n);
/// (n:r): join of {x : r.x <= n}.
SubmoduleElement residual_by_element(const SubmoduleElement& n, int r);
/// (n:A): join of {x : a.x <= n for all a in A}.
SubmoduleElement residual_by_ideal(const SubmoduleElement& n, const Ideal& a);
/// (l:n) = {r : r.n <= l}.
Ideal transporter(const SubmoduleElement& l, int n);
/// Rad(n) = Rad((n:e)).
Ideal radical_of_element(const SubmoduleElement& n);

}  // namespace lemod
