#include "lemod/properties.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "lemod/errors.hpp"
#include "lemod/primary.hpp"

namespace lemod {

long SuiteReport::failures() const {
  long total = 0;
  for (const auto& r : results) total += r.failures;
  return total;
}

const PropertyResult* SuiteReport::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::string group) : group_(std::move(group)) {}

  PropertyResult& add(std::string name) {
    PropertyResult& r = props_.emplace_back();
    r.name = std::move(name);
    r.group = group_;
    return r;
  }

  std::vector<PropertyResult> take() { return {props_.begin(), props_.end()}; }

 private:
  std::string group_;
  std::deque<PropertyResult> props_;
};

template <class Describe>
void expect(PropertyResult& p, bool ok, Describe&& describe) {
  ++p.checked;
  if (ok) return;
  if (p.failures++ == 0) p.first_failure = describe();
}

template <class Describe>
void note(PropertyResult& p, Describe&& describe) {
  if (p.informational++ == 0) p.first_informational = describe();
}

// Runs a check that may trip a library precondition or invariant; either
// counts as a failure of the property.
template <class Body>
void guarded(PropertyResult& p, Body&& body) {
  try {
    body();
  } catch (const CapacityError&) {
    throw;
  } catch (const std::exception& e) {
    ++p.checked;
    if (p.failures++ == 0) p.first_failure = std::string("exception: ") + e.what();
  }
}

std::string cat(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& s : parts) out += s;
  return out;
}

// Indexed caches of the quantities every law refers to.
struct Context {
  const LeModule& m;
  const FiniteRing& ring;
  std::vector<Ideal> ideals;
  std::map<Mask, int> ideal_index;
  std::vector<SubmoduleElement> subs;
  std::vector<int> targets;                  // positions in subs
  std::vector<std::vector<int>> action;      // [ideal][x] -> A x
  std::vector<std::vector<int>> residual;    // [ideal][sub] -> (n:A)
  std::vector<std::vector<Ideal>> transport; // [sub][x] -> (n:x)

  Context(const LeModule& module, std::optional<int> focus)
      : m(module), ring(module.ring()), ideals(module.ring().ideals()), subs(submodule_elements(module)) {
    for (int i = 0; i < static_cast<int>(ideals.size()); ++i) ideal_index[ideals[i].members()] = i;
    if (focus) {
      const auto target = submodule_element(m, *focus);
      for (int s = 0; s < static_cast<int>(subs.size()); ++s) {
        if (subs[s] == target) targets.push_back(s);
      }
    } else {
      for (int s = 0; s < static_cast<int>(subs.size()); ++s) targets.push_back(s);
    }
    action.assign(ideals.size(), std::vector<int>(m.size()));
    residual.assign(ideals.size(), std::vector<int>(subs.size()));
    for (std::size_t a = 0; a < ideals.size(); ++a) {
      for (int x = 0; x < m.size(); ++x) action[a][x] = ideal_action(m, ideals[a], x).index();
      for (std::size_t s = 0; s < subs.size(); ++s) residual[a][s] = residual_by_ideal(subs[s], ideals[a]).index();
    }
    transport.resize(subs.size());
    for (std::size_t s = 0; s < subs.size(); ++s) {
      for (int x = 0; x < m.size(); ++x) transport[s].push_back(transporter(subs[s], x));
    }
  }

  int index_of(const Ideal& i) const { return ideal_index.at(i.members()); }
  int sub_index(int x) const {
    for (int s = 0; s < static_cast<int>(subs.size()); ++s) {
      if (subs[s].index() == x) return s;
    }
    return -1;
  }
  const std::string& name(int x) const { return m.name(x); }
  std::string sub_name(int s) const { return m.name(subs[s].index()); }
  std::string label(int a) const { return ideal_label(ideals[a]); }
};

Ideal intersect_all(const FiniteRing& ring, const std::vector<Ideal>& xs) {
  Ideal out = unit_ideal(ring);
  for (const auto& x : xs) out = ideal_intersect(out, x);
  return out;
}

std::string ideal_list(const std::vector<Ideal>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + ideal_label(xs[i]);
  return out + "}";
}

std::vector<MultClosedSet> closed_set_catalogue(const FiniteRing& ring) {
  std::vector<MultClosedSet> out;
  std::vector<Mask> seen;
  auto push = [&](Mask members) {
    if (std::find(seen.begin(), seen.end(), members) != seen.end()) return;
    seen.push_back(members);
    out.push_back(mult_closed_set(ring, members));
  };
  const auto primes = prime_ideals(ring);
  const std::size_t limit = std::min<std::size_t>(primes.size(), 10);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << limit); ++pick) {
    std::vector<Ideal> chosen;
    for (std::size_t i = 0; i < limit; ++i) {
      if (pick >> i & 1u) chosen.push_back(primes[i]);
    }
    push(complement_of_prime_union(ring, chosen).members());
  }
  for (int a = 0; a < ring.size(); ++a) push(bit(ring.one()) | ring.powers(a));
  push(ring.all());
  return out;
}

}  // namespace

std::vector<PropertyResult> ring_properties(const FiniteRing& ring) {
  Recorder rec("ring");
  auto& closure = rec.add("ideal-closure");
  auto& rad_meet = rec.add("radical-intersection");
  auto& rad_idem = rec.add("radical-idempotent");
  auto& prime_primary = rec.add("prime-ideal-primary");
  auto& max_prime = rec.add("maximal-ideal-prime");
  auto& complement = rec.add("prime-complement-closed");

  const auto& ideals = ring.ideals();
  auto listed = [&](const Ideal& i) { return std::binary_search(ideals.begin(), ideals.end(), i); };
  for (const auto& a : ideals) {
    for (const auto& b : ideals) {
      const auto sum = ideal_sum(a, b), product = ideal_product(a, b), meet = ideal_intersect(a, b);
      expect(closure, listed(sum) && listed(product) && listed(meet),
             [&] { return cat({"A=", ideal_label(a), " B=", ideal_label(b)}); });
      expect(rad_meet, ideal_radical(meet) == ideal_intersect(ideal_radical(a), ideal_radical(b)),
             [&] { return cat({"A=", ideal_label(a), " B=", ideal_label(b)}); });
    }
    expect(rad_idem, ideal_radical(ideal_radical(a)) == ideal_radical(a),
           [&] { return cat({"A=", ideal_label(a)}); });
    if (is_prime_ideal(a)) {
      expect(prime_primary, is_primary_ideal(a) && ideal_radical(a) == a,
             [&] { return cat({"P=", ideal_label(a)}); });
    }
    if (is_maximal_ideal(a)) {
      expect(max_prime, is_prime_ideal(a), [&] { return cat({"I=", ideal_label(a)}); });
    }
  }
  const auto primes = prime_ideals(ring);
  const std::size_t limit = std::min<std::size_t>(primes.size(), 10);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << limit); ++pick) {
    std::vector<Ideal> chosen;
    for (std::size_t i = 0; i < limit; ++i) {
      if (pick >> i & 1u) chosen.push_back(primes[i]);
    }
    guarded(complement, [&] {
      complement_of_prime_union(ring, chosen);
      expect(complement, true, [] { return std::string(); });
    });
  }
  return rec.take();
}

std::vector<PropertyResult> law_properties(const LeModule& m, const SuiteOptions& options) {
  const Context c(m, options.element);
  const FiniteRing& R = c.ring;
  const int ni = static_cast<int>(c.ideals.size());
  const int ns = static_cast<int>(c.subs.size());

  Recorder rec("laws");
  auto& monotone = rec.add("action-order-monotone");
  auto& idempotent = rec.add("submodule-idempotent");
  auto& negation = rec.add("submodule-negation");
  auto& above_zero = rec.add("submodule-above-zero");
  auto& act_assoc = rec.add("action-associative");
  auto& act_contract = rec.add("action-contracts");
  auto& act_ideal_mono = rec.add("action-ideal-monotone");
  auto& act_mono = rec.add("action-monotone");
  auto& act_add = rec.add("action-additive");
  auto& act_sum = rec.add("action-ideal-sum");
  auto& act_meet = rec.add("action-meet");
  auto& act_inter = rec.add("action-ideal-intersection");
  auto& res_contains = rec.add("residual-contains");
  auto& res_absorbs = rec.add("residual-absorbs");
  auto& res_elem_adj = rec.add("residual-element-adjunction");
  auto& res_ideal_adj = rec.add("residual-ideal-adjunction");
  auto& res_power = rec.add("residual-power");
  auto& res_anti = rec.add("residual-antitone");
  auto& res_mono = rec.add("residual-monotone");
  auto& res_product = rec.add("residual-product");
  auto& res_meet = rec.add("residual-meet");
  auto& res_sum = rec.add("residual-ideal-sum");
  auto& tr_adj = rec.add("transporter-adjunction");
  auto& tr_mono = rec.add("transporter-monotone");
  auto& tr_meet = rec.add("transporter-meet");
  auto& tr_sum = rec.add("transporter-sum");
  auto& tr_join = rec.add("transporter-join");
  auto& tr_top_meet = rec.add("transporter-top-meet");
  auto& rad_mono = rec.add("radical-monotone");
  auto& rad_idem = rec.add("radical-idempotent");
  auto& rad_meet = rec.add("radical-meet");

  for (int r = 0; r < R.size(); ++r) {
    for (int x = 0; x < m.size(); ++x) {
      for (int y = 0; y < m.size(); ++y) {
        if (!m.leq(x, y)) continue;
        expect(monotone, m.leq(m.act(r, x), m.act(r, y)),
               [&] { return cat({"r=", std::to_string(r), " x=", c.name(x), " y=", c.name(y)}); });
      }
    }
  }

  const int minus_one = R.neg(R.one());
  for (int t : c.targets) {
    const int n = c.subs[t].index();
    const auto nn = [&] { return cat({"n=", c.name(n)}); };
    expect(idempotent, m.add(n, n) == n, nn);
    expect(negation, m.act(minus_one, n) == n, nn);
    expect(above_zero, m.leq(m.zero(), n), nn);

    for (int a = 0; a < ni; ++a) {
      const Ideal& A = c.ideals[a];
      const int an = c.action[a][n];
      const int res = c.residual[a][t];
      const auto an_desc = [&] { return cat({"A=", c.label(a), " n=", c.name(n)}); };
      expect(act_contract, m.leq(an, n), an_desc);
      expect(res_contains, m.leq(n, res), an_desc);
      expect(res_absorbs, m.leq(c.action[a][res], n), an_desc);
      for (int x = 0; x < m.size(); ++x) {
        expect(res_ideal_adj, m.leq(c.action[a][x], n) == m.leq(x, res),
               [&] { return cat({"A=", c.label(a), " n=", c.name(n), " x=", c.name(x)}); });
        expect(tr_adj, m.leq(c.action[a][x], n) == A.is_subset_of(c.transport[t][x]),
               [&] { return cat({"A=", c.label(a), " l=", c.name(n), " n=", c.name(x)}); });
      }

      for (int b = 0; b < ni; ++b) {
        const Ideal& B = c.ideals[b];
        const auto ab_desc = [&] { return cat({"A=", c.label(a), " B=", c.label(b), " n=", c.name(n)}); };
        const int ab = c.index_of(ideal_product(A, B));
        const int bn = c.action[b][n];
        expect(act_assoc, c.action[a][bn] == c.action[ab][n], ab_desc);
        const int sum = c.index_of(ideal_sum(A, B));
        expect(act_sum, c.action[sum][n] == m.add(an, bn), ab_desc);
        const int inter = c.index_of(ideal_intersect(A, B));
        expect(act_inter, m.leq(c.action[inter][n], m.meet(an, bn)), ab_desc);
        expect(res_product, c.residual[b][c.sub_index(c.residual[a][t])] == c.residual[ab][t], ab_desc);
        expect(res_sum, m.leq(c.residual[sum][t], m.meet(c.residual[a][t], c.residual[b][t])), ab_desc);
        if (A.is_subset_of(B)) {
          expect(act_ideal_mono, m.leq(an, bn), ab_desc);
          expect(res_anti, m.leq(c.residual[b][t], c.residual[a][t]), ab_desc);
        }
      }

      for (int l = 0; l < ns; ++l) {
        const int li = c.subs[l].index();
        const auto ln_desc = [&] { return cat({"A=", c.label(a), " l=", c.name(li), " n=", c.name(n)}); };
        const int al = c.action[a][li];
        expect(act_add, c.action[a][m.add(li, n)] == m.add(al, an), ln_desc);
        expect(act_meet, m.leq(c.action[a][m.meet(li, n)], m.meet(al, an)), ln_desc);
        const int meet_sub = c.sub_index(m.meet(li, n));
        expect(res_meet, c.residual[a][meet_sub] == m.meet(c.residual[a][l], c.residual[a][t]), ln_desc);
        if (m.leq(li, n)) {
          expect(res_mono, m.leq(c.residual[a][l], c.residual[a][t]), ln_desc);
          for (int b = 0; b < ni; ++b) {
            if (!A.is_subset_of(c.ideals[b])) continue;
            expect(act_mono, m.leq(al, c.action[b][n]),
                   [&] { return cat({"A=", c.label(a), " B=", c.label(b), " l=", c.name(li), " n=", c.name(n)}); });
          }
        }
      }
    }

    for (int r = 0; r < R.size(); ++r) {
      const int res = residual_by_element(c.subs[t], r).index();
      for (int x = 0; x < m.size(); ++x) {
        expect(res_elem_adj, m.leq(m.act(r, x), n) == m.leq(x, res),
               [&] { return cat({"r=", std::to_string(r), " n=", c.name(n), " x=", c.name(x)}); });
      }
      const int rr = residual_by_element(submodule_element(m, res), r).index();
      expect(res_power, residual_by_element(c.subs[t], R.mul(r, r)).index() == rr,
             [&] { return cat({"r=", std::to_string(r), " n=", c.name(n)}); });
    }

    // n plays k, l and n in turn through the pair loop below.
    for (int l = 0; l < ns; ++l) {
      const int li = c.subs[l].index();
      for (int k = 0; k < ns; ++k) {
        const int ki = c.subs[k].index();
        const auto desc = [&] { return cat({"k=", c.name(ki), " l=", c.name(li), " n=", c.name(n)}); };
        if (m.leq(li, n)) {
          expect(tr_mono,
                 c.transport[k][n].is_subset_of(c.transport[k][li]) &&
                     c.transport[l][ki].is_subset_of(c.transport[t][ki]),
                 desc);
        }
        const int meet_sub = c.sub_index(m.meet(li, n));
        expect(tr_meet, c.transport[meet_sub][ki] == ideal_intersect(c.transport[l][ki], c.transport[t][ki]), desc);
        const Ideal both = ideal_intersect(c.transport[k][li], c.transport[k][n]);
        expect(tr_sum, c.transport[k][m.add(li, n)] == both, desc);
        expect(tr_join, c.transport[k][m.join(li, n)] == both, desc);
      }
      const auto ln_desc = [&] { return cat({"l=", c.name(li), " n=", c.name(n)}); };
      const int meet_sub = c.sub_index(m.meet(li, n));
      expect(tr_top_meet,
             c.transport[meet_sub][m.top()] == ideal_intersect(c.transport[l][m.top()], c.transport[t][m.top()]),
             ln_desc);
      expect(rad_meet,
             radical_of_element(c.subs[meet_sub]) ==
                 ideal_intersect(radical_of_element(c.subs[l]), radical_of_element(c.subs[t])),
             ln_desc);
      if (m.leq(li, n)) {
        expect(rad_mono, radical_of_element(c.subs[l]).is_subset_of(radical_of_element(c.subs[t])), ln_desc);
      }
    }
    const Ideal rad = radical_of_element(c.subs[t]);
    expect(rad_idem, ideal_radical(rad) == rad, nn);
  }

  if (!options.element && ns > 0) {
    // Meet of every submodule element at once.
    Mask all_subs = 0;
    std::vector<Ideal> tops;
    for (const auto& s : c.subs) {
      all_subs |= bit(s.index());
      tops.push_back(transporter(s, m.top()));
    }
    const int bottom = c.sub_index(m.meet(all_subs));
    expect(tr_top_meet, c.transport[bottom][m.top()] == intersect_all(R, tops),
           [] { return std::string("all submodule elements"); });
  }
  return rec.take();
}

std::vector<PropertyResult> classification_properties(const LeModule& m, const SuiteOptions& options) {
  const auto all = classify_all(m);
  std::vector<const ElementClassification*> targets;
  for (const auto& e : all) {
    if (!options.element || e.element.index() == *options.element) targets.push_back(&e);
  }
  if (options.element && targets.empty()) submodule_element(m, *options.element);
  const FiniteRing& R = m.ring();

  Recorder rec("classification");
  auto& rad_prime = rec.add("primary-radical-prime");
  auto& max_primary = rec.add("maximal-radical-primary");
  auto& meets = rec.add("primary-meet");
  auto& tr_below = rec.add("primary-transporter-unit");
  auto& tr_primary = rec.add("primary-transporter-primary");
  auto& res_fixed = rec.add("primary-residual-fixed");
  auto& prime_primary = rec.add("prime-element-primary");
  auto& prime_tr = rec.add("prime-transporter-prime");
  auto& prime_top = rec.add("prime-top-prime");
  auto& crit_primary = rec.add("prime-criterion-primary");
  auto& crit_max = rec.add("prime-criterion-maximal");
  auto& witnesses = rec.add("witness-recheck");

  for (const auto* cls : targets) {
    const auto& q = cls->element;
    const int qi = q.index();
    const auto qn = [&] { return cat({"q=", m.name(qi)}); };
    const Ideal top_tr = transporter(q, m.top());

    if (cls->primary_witness) {
      const auto [a, x] = *cls->primary_witness;
      bool ok = m.leq(m.act(a, x), qi) && !m.leq(x, qi);
      for (int p : bits_of(R.powers(a))) ok = ok && !m.leq(m.act(p, m.top()), qi);
      expect(witnesses, ok, [&] { return cat({"primary witness for ", m.name(qi)}); });
    }
    if (cls->prime_witness) {
      const auto [r, x] = *cls->prime_witness;
      expect(witnesses, m.leq(m.act(r, x), qi) && !m.leq(x, qi) && !top_tr.contains(r),
             [&] { return cat({"prime witness for ", m.name(qi)}); });
    }

    if (q.is_proper() && is_maximal_ideal(radical_of_element(q))) {
      expect(max_primary, cls->is_primary, qn);
    }

    if (cls->is_primary) {
      const Ideal P = primary_radical(q);
      expect(rad_prime, is_prime_ideal(P) && P == radical_of_element(q), qn);
      for (const auto& other : all) {
        if (!other.is_primary || primary_radical(other.element) != P) continue;
        guarded(meets, [&] {
          const SubmoduleElement pair[] = {q, other.element};
          const auto met = meet_primaries(pair);
          expect(meets, is_primary_element(met).holds && primary_radical(met) == P,
                 [&] { return cat({"q1=", m.name(qi), " q2=", m.name(other.element.index())}); });
        });
      }
      for (int x = 0; x < m.size(); ++x) {
        const Ideal tr = transporter(q, x);
        const auto desc = [&] { return cat({"q=", m.name(qi), " n=", m.name(x)}); };
        if (m.leq(x, qi)) {
          expect(tr_below, !tr.is_proper(), desc);
        } else {
          expect(tr_primary, is_primary_ideal(tr) && ideal_radical(tr) == P, desc);
        }
      }
      for (int a = 0; a < R.size(); ++a) {
        if (P.contains(a)) continue;
        expect(res_fixed, residual_by_element(q, a) == q,
               [&] { return cat({"q=", m.name(qi), " a=", std::to_string(a)}); });
      }
    }

    if (cls->is_prime_submodule) {
      expect(prime_primary, cls->is_primary, qn);
      expect(prime_top, is_prime_ideal(top_tr), qn);
      for (int x = 0; x < m.size(); ++x) {
        const Ideal tr = transporter(q, x);
        if (!tr.is_proper()) {
          note(prime_tr, [&] { return cat({"p=", m.name(qi), " x=", m.name(x), ": x <= p, (p:x) = R"}); });
          continue;
        }
        expect(prime_tr, is_prime_ideal(tr), [&] { return cat({"p=", m.name(qi), " x=", m.name(x)}); });
      }
    }

    if (q.is_proper() && is_prime_ideal(top_tr)) {
      if (cls->is_primary) {
        expect(crit_primary, cls->is_prime_submodule, qn);
      } else if (!cls->is_prime_submodule) {
        note(crit_primary, [&] { return cat({"p=", m.name(qi), ": (p:e) prime, p not prime"}); });
      }
    }
    if (q.is_proper() && is_maximal_ideal(top_tr)) {
      expect(crit_max, cls->is_prime_submodule, qn);
    }
  }
  return rec.take();
}

std::vector<PropertyResult> decomposition_properties(const LeModule& m, const SuiteOptions& options) {
  const FiniteRing& R = m.ring();
  std::vector<SubmoduleElement> targets;
  if (options.element) {
    targets.push_back(submodule_element(m, *options.element));
  } else {
    targets = submodule_elements(m);
  }
  const auto catalogue = closed_set_catalogue(R);
  const auto primes = prime_ideals(R);

  Recorder rec("decomposition");
  auto& exists = rec.add("decomposition-exists");
  auto& sound = rec.add("reduction-sound");
  auto& prime_comp = rec.add("prime-components-criterion");
  auto& assoc_crit = rec.add("associated-prime-criterion");
  auto& minimal = rec.add("minimal-divisors-associated");
  auto& rad_min = rec.add("radical-minimal-divisors");
  auto& rad_iso = rec.add("radical-isolated-divisors");
  auto& single = rec.add("single-isolated-divisor");
  auto& s_comp = rec.add("s-component");
  auto& formula = rec.add("isolated-component-formula");
  auto& isolated_fixed = rec.add("isolated-component-unique");
  auto& saturation = rec.add("saturation");
  auto& first = rec.add("first-uniqueness");
  auto& length = rec.add("decomposition-length");
  auto& second = rec.add("second-uniqueness");
  auto& distinct = rec.add("distinct-decompositions");

  for (const auto& n : targets) {
    if (!n.is_proper()) continue;
    const int ni = n.index();
    const auto nn = [&] { return cat({"n=", m.name(ni)}); };
    const auto decs = enumerate_reduced_decompositions(n, options.search);
    const auto found = find_reduced_decomposition(n);
    if (decs.empty()) {
      note(exists, [&] { return cat({"n=", m.name(ni), " has no primary decomposition"}); });
      expect(sound, !found, nn);
      continue;
    }
    expect(exists, true, nn);
    guarded(sound, [&] {
      bool ok = found.has_value();
      if (ok) {
        std::vector<int> comps;
        for (const auto& q : found->components) comps.push_back(q.index());
        ok = is_reduced(*found) && m.meet(comps) == ni &&
             std::any_of(decs.begin(), decs.end(), [&](const auto& d) { return d.indices() == found->indices(); });
        for (const auto& q : found->components) ok = ok && is_primary_element(q).holds;
      }
      expect(sound, ok, nn);
    });

    const Ideal top_tr = transporter(n, m.top());
    const Ideal rad = radical_of_element(n);
    const auto ap = associated_primes(decs.front());
    std::vector<Ideal> isolated;
    for (std::size_t i = 0; i < ap.primes.size(); ++i) {
      if (ap.isolated[i]) isolated.push_back(ap.primes[i]);
    }

    for (const auto& d : decs) {
      const auto dn = [&] {
        std::string s = cat({"n=", m.name(ni), " decomposition"});
        for (const auto& q : d.components) s += " " + m.name(q.index());
        return s;
      };
      bool all_prime = true;
      for (const auto& q : d.components) all_prime = all_prime && is_prime_submodule_element(q).holds;
      expect(prime_comp, all_prime == (rad == top_tr), dn);

      for (const auto& P : primes) {
        const bool some = std::any_of(d.radicals.begin(), d.radicals.end(), [&](const Ideal& Pi) { return Pi.is_subset_of(P); });
        expect(assoc_crit, top_tr.is_subset_of(P) == some, [&] { return cat({dn(), " P=", ideal_label(P)}); });
      }

      for (const auto& S : catalogue) {
        Mask kept = 0;
        for (std::size_t i = 0; i < d.components.size(); ++i) {
          if ((d.radicals[i].members() & S.members()) == 0) kept |= bit(d.components[i].index());
        }
        const int expected = kept ? m.meet(kept) : m.top();
        expect(s_comp, s_component(n, S).index() == expected, [&] { return cat({dn(), " S=", std::to_string(S.members())}); });
      }

      const auto dap = associated_primes(d);
      for (std::size_t i = 0; i < d.components.size(); ++i) {
        const int qprime = isolated_component_formula(n, d.radicals[i]).index();
        const int qi = d.components[i].index();
        const auto pos = std::lower_bound(dap.primes.begin(), dap.primes.end(), d.radicals[i]) - dap.primes.begin();
        const bool is_iso = dap.isolated[pos];
        expect(formula, m.leq(qprime, qi) && (!is_iso || qprime == qi),
               [&] { return cat({dn(), " P=", ideal_label(d.radicals[i])}); });
      }

      Mask associated = 0;
      for (const auto& Pi : d.radicals) associated |= Pi.members();
      for (int r = 0; r < R.size(); ++r) {
        expect(saturation, saturation_fixpoint_check(n, r) == !has(associated, r),
               [&] { return cat({dn(), " r=", std::to_string(r)}); });
      }
    }

    const auto minimal_divisors = minimal_prime_divisors(n);
    expect(minimal, minimal_divisors == isolated, [&] {
      return cat({"n=", m.name(ni), " minimal ", ideal_list(minimal_divisors), " isolated ", ideal_list(isolated)});
    });
    expect(rad_min, rad == intersect_all(R, minimal_divisors), nn);
    expect(rad_iso, rad == intersect_all(R, isolated), nn);
    expect(single, is_prime_ideal(rad) == (isolated.size() == 1), nn);

    for (const auto& P : isolated) {
      int component = -1;
      bool same = true;
      for (const auto& d : decs) {
        for (std::size_t i = 0; i < d.components.size(); ++i) {
          if (d.radicals[i] != P) continue;
          if (component < 0) component = d.components[i].index();
          same = same && component == d.components[i].index();
        }
      }
      expect(isolated_fixed, same && component >= 0,
             [&] { return cat({"n=", m.name(ni), " P=", ideal_label(P)}); });
    }

    const auto sorted_radicals = [](const PrimaryDecomposition& d) {
      auto rs = d.radicals;
      std::sort(rs.begin(), rs.end());
      return rs;
    };
    for (const auto& d : decs) {
      expect(length, d.components.size() == decs.front().components.size() &&
                         sorted_radicals(d) == sorted_radicals(decs.front()),
             nn);
    }
    ++distinct.checked;
    if (decs.size() > 1) {
      note(distinct, [&] { return cat({"n=", m.name(ni), " has ", std::to_string(decs.size()), " reduced decompositions"}); });
    }

    guarded(first, [&] {
      const auto report = verify_first_uniqueness(n, options.search);
      expect(first, report.holds, [&] {
        return cat({"n=", m.name(ni), " decomposition primes ", ideal_list(report.decomposition_primes),
                    " transporter primes ", ideal_list(report.transporter_primes)});
      });
    });

    const std::size_t k = std::min<std::size_t>(isolated.size(), 16);
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
      std::vector<Ideal> chosen;
      for (std::size_t i = 0; i < k; ++i) {
        if (pick >> i & 1u) chosen.push_back(isolated[i]);
      }
      guarded(second, [&] {
        const auto report = verify_second_uniqueness(n, chosen, options.search);
        expect(second, report.holds, [&] { return cat({"n=", m.name(ni), " set ", ideal_list(chosen)}); });
      });
    }
  }
  return rec.take();
}

SuiteReport run_property_suite(const LeModule& m, const SuiteOptions& options) {
  SuiteReport report;
  auto append = [&](std::vector<PropertyResult> rs) {
    for (auto& r : rs) report.results.push_back(std::move(r));
  };
  append(ring_properties(m.ring()));
  append(law_properties(m, options));
  append(classification_properties(m, options));
  append(decomposition_properties(m, options));
  return report;
}

}  // namespace lemod
