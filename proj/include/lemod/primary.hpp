#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lemod/finite_ring.hpp"
#include "lemod/le_module.hpp"

namespace lemod {

/// Ring element a and module element x instantiating a failed implication.
struct PairWitness {
  int ring_element;
  int module_element;

  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

/// Outcome of a predicate on a submodule element. `witness` is the
/// lexicographically first violating (a, x) pair; it is absent when the
/// predicate fails only because the element is not proper.
struct Verdict {
  bool holds = false;
  std::optional<PairWitness> witness;

  explicit operator bool() const { return holds; }
};

/// Proper n such that a.x <= n implies x <= n or a^m.e <= n for some m >= 1.
Verdict is_primary_element(const SubmoduleElement& n);

/// Rad(q) for primary q; throws UsageError otherwise.
Ideal primary_radical(const SubmoduleElement& q);

/// Proper p such that r.x <= p implies r in (p:e) or x <= p.
Verdict is_prime_submodule_element(const SubmoduleElement& p);

/// Meet of P-primary elements sharing one radical P. Throws UsageError on an
/// empty list, a non-primary entry or mixed radicals; throws InvariantError
/// if the meet fails to be P-primary.
SubmoduleElement meet_primaries(std::span<const SubmoduleElement> qs);

struct ElementClassification {
  SubmoduleElement element;
  bool is_primary;
  bool is_prime_submodule;
  Ideal radical;
  std::optional<PairWitness> primary_witness;
  std::optional<PairWitness> prime_witness;
};

ElementClassification classify(const SubmoduleElement& n);
/// Classification of every submodule element, index order.
std::vector<ElementClassification> classify_all(const LeModule& m);

/// All primary elements, index order.
std::vector<SubmoduleElement> primary_elements(const LeModule& m);

}  // namespace lemod
