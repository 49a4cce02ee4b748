#include "lemod/decomposition.hpp"

#include <algorithm>
#include <map>

#include "lemod/errors.hpp"

namespace lemod {

namespace {

int meet_or_top(const LeModule& m, Mask xs) { return xs == 0 ? m.top() : m.meet(xs); }

Mask mask_of(std::span<const SubmoduleElement> xs) {
  Mask out = 0;
  for (const auto& x : xs) out |= bit(x.index());
  return out;
}

void require_proper(const SubmoduleElement& n) {
  if (!n.is_proper()) throw UsageError("operation needs a proper submodule element");
}

}  // namespace

std::vector<int> PrimaryDecomposition::indices() const {
  std::vector<int> out;
  for (const auto& q : components) out.push_back(q.index());
  return out;
}

bool is_reduced(const PrimaryDecomposition& d) {
  const auto& m = d.target.module();
  const Mask all = mask_of(d.components);
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const int qi = d.components[i].index();
    if (m.leq(meet_or_top(m, all & ~bit(qi)), qi)) return false;
    for (std::size_t j = i + 1; j < d.components.size(); ++j) {
      if (d.radicals[i] == d.radicals[j]) return false;
    }
  }
  return true;
}

PrimaryDecomposition make_decomposition(const SubmoduleElement& target, std::vector<SubmoduleElement> components) {
  if (components.empty()) throw UsageError("a decomposition needs at least one component");
  const auto& m = target.module();
  for (const auto& q : components) {
    if (&q.module() != &m) throw UsageError("components belong to a different module");
    if (!is_primary_element(q)) throw UsageError("component " + m.name(q.index()) + " is not primary");
  }
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());
  if (m.meet(mask_of(components)) != target.index()) {
    throw UsageError("components do not meet to " + m.name(target.index()));
  }
  PrimaryDecomposition d{target, std::move(components), {}, false};
  for (const auto& q : d.components) d.radicals.push_back(radical_of_element(q));
  d.reduced = is_reduced(d);
  return d;
}

std::vector<SubmoduleElement> primary_elements_above(const SubmoduleElement& n) {
  const auto& m = n.module();
  std::vector<SubmoduleElement> out;
  for (const auto& q : primary_elements(m)) {
    if (m.leq(n.index(), q.index())) out.push_back(q);
  }
  return out;
}

std::optional<PrimaryDecomposition> find_reduced_decomposition(const SubmoduleElement& n) {
  require_proper(n);
  const auto& m = n.module();
  auto pool = primary_elements_above(n);
  if (pool.empty() || m.meet(mask_of(pool)) != n.index()) return std::nullopt;

  Mask kept = mask_of(pool);
  for (const auto& q : pool) {
    const Mask rest = kept & ~bit(q.index());
    if (m.leq(meet_or_top(m, rest), q.index())) kept = rest;
  }

  std::map<Ideal, std::vector<SubmoduleElement>> groups;
  for (const auto& q : pool) {
    if (has(kept, q.index())) groups[radical_of_element(q)].push_back(q);
  }
  std::vector<SubmoduleElement> merged;
  for (const auto& [radical, qs] : groups) merged.push_back(meet_primaries(qs));
  auto d = make_decomposition(n, std::move(merged));
  if (!d.reduced) throw InvariantError("reduction produced an unreduced decomposition");
  return d;
}

std::vector<PrimaryDecomposition> enumerate_reduced_decompositions(const SubmoduleElement& n,
                                                                   const SearchOptions& options) {
  require_proper(n);
  const auto& m = n.module();
  const auto pool = primary_elements_above(n);
  if (static_cast<int>(pool.size()) > options.max_pool) {
    throw CapacityError("candidate pool of " + std::to_string(pool.size()) +
                        " primary elements exceeds the search cap " + std::to_string(options.max_pool));
  }
  std::vector<Ideal> radicals;
  for (const auto& q : pool) radicals.push_back(radical_of_element(q));

  std::vector<std::vector<int>> found;  // positions into pool
  std::vector<int> chosen;
  // Every prefix of a reduced decomposition (in pool order) strictly lowers
  // the meet and never repeats a radical, so those two prunes lose nothing.
  auto extend = [&](auto&& self, std::size_t from, int current) -> void {
    for (std::size_t j = from; j < pool.size(); ++j) {
      const bool repeated = std::any_of(chosen.begin(), chosen.end(),
                                        [&](int c) { return radicals[c] == radicals[j]; });
      if (repeated) continue;
      const int next = m.meet(current, pool[j].index());
      if (next == current) continue;
      chosen.push_back(static_cast<int>(j));
      if (next == n.index()) {
        found.push_back(chosen);
      } else {
        self(self, j + 1, next);
      }
      chosen.pop_back();
    }
  };
  extend(extend, 0, m.top());

  std::vector<PrimaryDecomposition> out;
  for (const auto& positions : found) {
    std::vector<SubmoduleElement> comps;
    for (int p : positions) comps.push_back(pool[p]);
    auto d = make_decomposition(n, std::move(comps));
    if (d.reduced) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const PrimaryDecomposition& a, const PrimaryDecomposition& b) {
    if (a.components.size() != b.components.size()) return a.components.size() < b.components.size();
    return a.indices() < b.indices();
  });
  return out;
}

LaskerianReport is_laskerian(const LeModule& m) {
  LaskerianReport report;
  for (const auto& n : submodule_elements(m)) {
    if (!n.is_proper()) continue;
    ++report.checked;
    if (!find_reduced_decomposition(n)) {
      report.holds = false;
      report.counterexample = n;
      return report;
    }
  }
  return report;
}

AssociatedPrimes associated_primes(const PrimaryDecomposition& d) {
  if (!d.reduced) throw UsageError("associated primes are defined from a reduced decomposition");
  AssociatedPrimes out{d.target, d.radicals, {}};
  std::sort(out.primes.begin(), out.primes.end());
  for (const auto& p : out.primes) {
    const bool minimal = std::none_of(out.primes.begin(), out.primes.end(),
                                      [&](const Ideal& q) { return q != p && q.is_subset_of(p); });
    out.isolated.push_back(minimal);
  }
  return out;
}

std::vector<Ideal> minimal_prime_divisors(const SubmoduleElement& n) {
  require_proper(n);
  return minimal_primes_over(transporter(n, n.module().top()));
}

SubmoduleElement s_component(const SubmoduleElement& n, const MultClosedSet& s) {
  const auto& m = n.module();
  if (&s.ring() != &m.ring()) throw UsageError("multiplicatively closed set belongs to a different ring");
  Mask xs = 0;
  for (int x = 0; x < m.size(); ++x) {
    bool hit = false;
    for_each_bit(s.members(), [&](int r) { hit = hit || m.leq(m.act(r, x), n.index()); });
    if (hit) xs |= bit(x);
  }
  auto out = as_submodule_element(m, m.join(xs));
  if (!out) throw InvariantError("S-component is not a submodule element");
  return *out;
}

SubmoduleElement isolated_component_formula(const SubmoduleElement& n, const Ideal& prime) {
  const auto& m = n.module();
  if (&prime.ring() != &m.ring()) throw UsageError("ideal belongs to a different ring");
  if (!is_prime_ideal(prime)) throw UsageError("isolated component formula needs a prime ideal");
  Mask xs = 0;
  for (int x = 0; x < m.size(); ++x) {
    if (!transporter(n, x).is_subset_of(prime)) xs |= bit(x);
  }
  auto out = as_submodule_element(m, m.join(xs));
  if (!out) throw InvariantError("isolated component formula produced a non-submodule element");
  return *out;
}

FirstUniquenessReport verify_first_uniqueness(const SubmoduleElement& n, const SearchOptions& options) {
  const auto decs = enumerate_reduced_decompositions(n, options);
  if (decs.empty()) {
    throw UsageError("element " + n.module().name(n.index()) + " has no reduced primary decomposition");
  }
  FirstUniquenessReport r{n};
  r.decompositions = static_cast<int>(decs.size());
  r.decomposition_primes = associated_primes(decs.front()).primes;
  for (const auto& d : decs) {
    if (associated_primes(d).primes != r.decomposition_primes) r.radical_sets_agree = false;
  }
  const auto& m = n.module();
  std::map<Ideal, int> found;
  for (int x = 0; x < m.size(); ++x) {
    if (m.leq(x, n.index())) continue;
    const Ideal colon = transporter(n, x);
    if (is_primary_ideal(colon)) found.try_emplace(ideal_radical(colon), x);
  }
  for (const auto& [prime, x] : found) {
    r.transporter_primes.push_back(prime);
    r.witnesses.push_back(x);
  }
  r.holds = r.radical_sets_agree && r.transporter_primes == r.decomposition_primes;
  return r;
}

SecondUniquenessReport verify_second_uniqueness(const SubmoduleElement& n, std::span<const Ideal> isolated_set,
                                                const SearchOptions& options) {
  const auto decs = enumerate_reduced_decompositions(n, options);
  if (decs.empty()) {
    throw UsageError("element " + n.module().name(n.index()) + " has no reduced primary decomposition");
  }
  const auto assoc = associated_primes(decs.front());
  std::vector<Ideal> set(isolated_set.begin(), isolated_set.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (const auto& p : set) {
    const auto it = std::find(assoc.primes.begin(), assoc.primes.end(), p);
    if (it == assoc.primes.end() || !assoc.isolated[it - assoc.primes.begin()]) {
      throw UsageError("ideal " + ideal_label(p) + " is not an isolated prime divisor");
    }
  }
  const auto& m = n.module();
  SecondUniquenessReport r{n, set};
  for (const auto& d : decs) {
    Mask xs = 0;
    std::size_t matched = 0;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
      if (std::find(set.begin(), set.end(), d.radicals[i]) != set.end()) {
        xs |= bit(d.components[i].index());
        ++matched;
      }
    }
    r.meets.push_back(matched == set.size() ? meet_or_top(m, xs) : -1);
  }
  r.s_component = s_component(n, complement_of_prime_union(m.ring(), set)).index();
  r.holds = std::all_of(r.meets.begin(), r.meets.end(), [&](int x) { return x == r.s_component; });
  return r;
}

bool saturation_fixpoint_check(const SubmoduleElement& n, int r) {
  return residual_by_element(n, r) == n;
}

}  // namespace lemod
