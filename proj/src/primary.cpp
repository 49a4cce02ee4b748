#include "lemod/primary.hpp"

#include "lemod/errors.hpp"

namespace lemod {

namespace {

// a^m.e <= n for some m >= 1, i.e. some power of a lies in (n:e).
bool some_power_kills_top(const LeModule& m, int a, int n) {
  bool found = false;
  for_each_bit(m.ring().powers(a), [&](int p) { found = found || m.leq(m.act(p, m.top()), n); });
  return found;
}

}  // namespace

Verdict is_primary_element(const SubmoduleElement& n) {
  const auto& m = n.module();
  if (!n.is_proper()) return {};
  for (int a = 0; a < m.ring().size(); ++a) {
    if (some_power_kills_top(m, a, n.index())) continue;
    for (int x = 0; x < m.size(); ++x) {
      if (m.leq(m.act(a, x), n.index()) && !m.leq(x, n.index())) return {false, PairWitness{a, x}};
    }
  }
  return {true, std::nullopt};
}

Ideal primary_radical(const SubmoduleElement& q) {
  if (!is_primary_element(q)) {
    throw UsageError("element " + q.module().name(q.index()) + " is not primary");
  }
  return radical_of_element(q);
}

Verdict is_prime_submodule_element(const SubmoduleElement& p) {
  const auto& m = p.module();
  if (!p.is_proper()) return {};
  const Ideal colon = transporter(p, m.top());
  for (int r = 0; r < m.ring().size(); ++r) {
    if (colon.contains(r)) continue;
    for (int x = 0; x < m.size(); ++x) {
      if (m.leq(m.act(r, x), p.index()) && !m.leq(x, p.index())) return {false, PairWitness{r, x}};
    }
  }
  return {true, std::nullopt};
}

SubmoduleElement meet_primaries(std::span<const SubmoduleElement> qs) {
  if (qs.empty()) throw UsageError("meet_primaries needs at least one element");
  const auto& m = qs.front().module();
  const Ideal radical = primary_radical(qs.front());
  Mask xs = 0;
  for (const auto& q : qs) {
    if (&q.module() != &m) throw UsageError("elements belong to different modules");
    if (primary_radical(q) != radical) throw UsageError("primary elements have different radicals");
    xs |= bit(q.index());
  }
  auto meet = as_submodule_element(m, m.meet(xs));
  if (!meet || !is_primary_element(*meet) || radical_of_element(*meet) != radical) {
    throw InvariantError("meet of same-radical primary elements is not primary with that radical");
  }
  return *meet;
}

ElementClassification classify(const SubmoduleElement& n) {
  const auto primary = is_primary_element(n);
  const auto prime = is_prime_submodule_element(n);
  return {n, primary.holds, prime.holds, radical_of_element(n), primary.witness, prime.witness};
}

std::vector<ElementClassification> classify_all(const LeModule& m) {
  std::vector<ElementClassification> out;
  for (const auto& n : submodule_elements(m)) out.push_back(classify(n));
  return out;
}

std::vector<SubmoduleElement> primary_elements(const LeModule& m) {
  std::vector<SubmoduleElement> out;
  for (const auto& n : submodule_elements(m)) {
    if (is_primary_element(n)) out.push_back(n);
  }
  return out;
}

}  // namespace lemod
