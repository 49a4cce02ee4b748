// Acceptance suite: one PASS/FAIL line per criterion, with timing.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "lemod/cli.hpp"
#include "lemod/decomposition.hpp"
#include "lemod/errors.hpp"
#include "lemod/primary.hpp"
#include "lemod/properties.hpp"
#include "lemod/structure_io.hpp"
#include "schema_check.hpp"
#include "support.hpp"

namespace lemod {
namespace {

namespace oracle = testing::oracle;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 = no runtime bound
  std::function<Outcome()> body;
};

std::string fixture(const char* name) { return std::string(LEMOD_FIXTURE_DIR) + "/" + name; }

const std::vector<testing::NamedStructure>& structures() {
  static const auto all = [] {
    auto c = testing::corpus();
    c.insert(c.begin(), {"z12", testing::z12()});
    return c;
  }();
  return all;
}

// Every violation must re-check on the tampered tables and not on the originals.
bool violations_recheck(const std::vector<Violation>& vs, const RawRing& tampered, const RawRing& original) {
  if (vs.empty()) return false;
  for (const auto& v : vs) {
    if (!recheck_ring_violation(tampered, v) || recheck_ring_violation(original, v)) return false;
  }
  return true;
}

bool violations_recheck(const std::vector<Violation>& vs, const RawModule& tampered, const RawModule& original,
                        const FiniteRing& ring) {
  if (vs.empty()) return false;
  for (const auto& v : vs) {
    if (!recheck_module_violation(tampered, ring, v) || recheck_module_violation(original, ring, v)) return false;
  }
  return true;
}

Outcome axiom_suite() {
  Outcome o;
  int structures_checked = 0, random_count = 0;
  long violations = 0;
  for (const auto& [label, s] : structures()) {
    const auto ring = validate_ring(s.ring->tables());
    violations += static_cast<long>(ring.violations.size());
    if (ring.ok()) violations += static_cast<long>(validate_le_module(s.module->tables(), ring.ring).violations.size());
    random_count += label.rfind("random-", 0) == 0 && s.ring->size() <= 16 && s.module->size() <= 8;
    ++structures_checked;
  }

  int tampered = 0, caught = 0;
  auto ring_variant = [&](const RawRing& original, RawRing bad) {
    ++tampered;
    caught += violations_recheck(validate_ring(bad).violations, bad, original);
  };
  auto module_variant = [&](const Structure& s, RawModule bad) {
    ++tampered;
    caught += violations_recheck(validate_le_module(bad, s.ring).violations, bad, s.module->tables(), *s.ring);
  };

  const auto& z = testing::z12();
  const int two = testing::element(*z.module, "⟨2⟩"), three = testing::element(*z.module, "⟨3⟩");
  {
    auto bad = z.ring->tables();
    bad.mul[2][3] = 7;
    ring_variant(z.ring->tables(), bad);
  }
  {
    auto bad = z.module->tables();
    bad.action[2][two] = three;
    module_variant(z, bad);
  }
  {
    auto bad = z.module->tables();
    bad.action[z.ring->one()][two] = three;
    module_variant(z, bad);
  }
  {
    auto bad = z.module->tables();
    bad.add[two][three] = two;
    module_variant(z, bad);
  }
  for (const auto& [label, s] : structures()) {
    const auto& m = s.module->tables();
    if (m.size >= 2) {
      auto bad = m;
      bad.add[0][1] = (m.add[1][0] + 1) % m.size;
      module_variant(s, bad);
    }
    const auto& r = s.ring->tables();
    if (r.size >= 2) {
      auto bad = r;
      bad.mul[0][1] = (r.mul[1][0] + 1) % r.size;
      ring_variant(r, bad);
    }
  }

  o.pass = violations == 0 && random_count >= 50 && caught == tampered;
  o.detail = std::to_string(structures_checked) + " structures (" + std::to_string(random_count) +
             " random), " + std::to_string(violations) + " violations; " + std::to_string(caught) + "/" +
             std::to_string(tampered) + " tampered variants caught with re-checked witnesses";
  return o;
}

Outcome group_suite(const std::function<std::vector<PropertyResult>(const LeModule&)>& run, int min_properties,
                    bool require_all_exercised) {
  std::map<std::string, long> checked, failures;
  std::string first;
  for (const auto& [label, s] : structures()) {
    for (const auto& r : run(*s.module)) {
      checked[r.name] += r.checked;
      failures[r.name] += r.failures;
      if (r.failures && first.empty()) first = label + " " + r.name + ": " + *r.first_failure;
    }
  }
  long total_checked = 0, total_failures = 0;
  int exercised = 0;
  std::string idle;
  for (const auto& [name, n] : checked) {
    total_checked += n;
    total_failures += failures[name];
    if (n > 0) {
      ++exercised;
    } else {
      idle += " " + name;
    }
  }
  Outcome o;
  o.pass = total_failures == 0 && exercised >= min_properties && (!require_all_exercised || idle.empty());
  o.detail = std::to_string(checked.size()) + " properties (" + std::to_string(exercised) + " exercised), " +
             std::to_string(total_checked) + " instances, " + std::to_string(total_failures) + " failures";
  if (!first.empty()) o.detail += "; first: " + first;
  if (require_all_exercised && !idle.empty()) o.detail += "; never exercised:" + idle;
  return o;
}

Outcome golden_z12() {
  const auto& s = testing::z12();
  const auto& m = *s.module;
  const auto& R = *s.ring;
  const oracle::ModuleView view{m.tables()};
  const oracle::RingView ring{R.tables()};
  std::vector<std::string> misses;
  auto need = [&](bool ok, const char* what) {
    if (!ok) misses.push_back(what);
  };
  auto idx = [&](const char* name) { return testing::element(m, name); };

  std::set<int> primary, prime, oracle_primary, oracle_prime;
  for (const auto& c : classify_all(m)) {
    if (c.is_primary) primary.insert(c.element.index());
    if (c.is_prime_submodule) prime.insert(c.element.index());
  }
  for (int x = 0; x < m.size(); ++x) {
    if (!oracle::is_submodule_element(view, R.size(), x)) continue;
    if (oracle::is_primary_element(view, ring, x)) oracle_primary.insert(x);
    if (oracle::is_prime_element(view, ring, x)) oracle_prime.insert(x);
  }
  const std::set<int> want_primary{idx("⟨2⟩"), idx("⟨3⟩"), idx("⟨4⟩")}, want_prime{idx("⟨2⟩"), idx("⟨3⟩")};
  need(primary == want_primary && oracle_primary == want_primary, "primary elements");
  need(prime == want_prime && oracle_prime == want_prime, "prime submodule elements");

  const auto zero = submodule_element(m, m.zero());
  const auto decs = enumerate_reduced_decompositions(zero);
  const std::vector<int> want_components = [&] {
    std::vector<int> v{idx("⟨4⟩"), idx("⟨3⟩")};
    std::sort(v.begin(), v.end());
    return v;
  }();
  need(decs.size() == 1 && decs[0].indices() == want_components, "unique reduced decomposition");
  need(oracle::reduced_decompositions(m.tables(), R.tables(), m.zero()) ==
           std::vector<std::vector<int>>{want_components},
       "oracle decomposition");

  const Ideal p2 = principal_ideal(R, 2), p3 = principal_ideal(R, 3), p6 = principal_ideal(R, 6);
  if (!decs.empty()) {
    const auto ap = associated_primes(decs[0]);
    need(ap.primes == std::vector<Ideal>{p3, p2} && ap.isolated == std::vector<bool>{true, true},
         "associated primes");
  }
  const Ideal rad = radical_of_element(zero);
  need(rad == p6 && rad == ideal_intersect(p2, p3) && rad.members() == (bit(0) | bit(6)) &&
           oracle::element_radical(view, R.tables(), m.zero()) == rad.members(),
       "radical of 0_M");

  const std::vector<Ideal> evens{p2};
  const auto odds = complement_of_prime_union(R, evens);
  int scan = -1;
  {
    Mask killed = 0;
    for (int x = 0; x < m.size(); ++x) {
      for (int r = 1; r < 12; r += 2) {
        if (view.leq(view.act(r, x), m.zero())) killed |= bit(x);
      }
    }
    scan = view.join(killed);
  }
  need(odds.members() == 0b101010101010 && s_component(zero, odds).index() == idx("⟨4⟩") && scan == idx("⟨4⟩"),
       "n_S for odd residues");
  need(isolated_component_formula(zero, p2).index() == idx("⟨4⟩") &&
           isolated_component_formula(zero, p3).index() == idx("⟨3⟩"),
       "isolated component formula");

  Outcome o;
  o.pass = misses.empty();
  o.detail = o.pass ? "primary, prime, decomposition, primes, radical, n_S and q' all match" : "mismatch:";
  for (const auto& w : misses) o.detail += " [" + w + "]";
  return o;
}

Outcome first_uniqueness() {
  long elements = 0, decompositions = 0, discrepancies = 0;
  std::string first;
  for (const auto& [label, s] : structures()) {
    const auto& m = *s.module;
    const oracle::ModuleView view{m.tables()};
    const auto& raw = s.ring->tables();
    for (const auto& n : submodule_elements(m)) {
      if (!n.is_proper()) continue;
      const auto decs = enumerate_reduced_decompositions(n);
      if (decs.empty()) continue;
      ++elements;
      std::set<Mask> characterized;
      for (int x = 0; x < m.size(); ++x) {
        if (view.leq(x, n.index())) continue;
        const Mask t = oracle::transporter(view, raw.size, n.index(), x);
        if (oracle::is_primary(raw, t)) characterized.insert(oracle::radical(raw, t));
      }
      for (const auto& d : decs) {
        ++decompositions;
        std::set<Mask> radicals;
        for (const auto& P : d.radicals) radicals.insert(P.members());
        if (radicals != characterized) {
          ++discrepancies;
          if (first.empty()) first = label + " " + m.name(n.index());
        }
      }
      if (!verify_first_uniqueness(n).holds) {
        ++discrepancies;
        if (first.empty()) first = label + " " + m.name(n.index()) + " (report)";
      }
    }
  }
  Outcome o;
  o.pass = discrepancies == 0 && elements > 0;
  o.detail = std::to_string(elements) + " decomposable elements, " + std::to_string(decompositions) +
             " reduced decompositions, " + std::to_string(discrepancies) + " discrepancies";
  if (!first.empty()) o.detail += "; first at " + first;
  return o;
}

Outcome second_uniqueness() {
  long elements = 0, subsets = 0, discrepancies = 0;
  std::string first;
  for (const auto& [label, s] : structures()) {
    const auto& m = *s.module;
    const oracle::ModuleView view{m.tables()};
    const auto& R = *s.ring;
    for (const auto& n : submodule_elements(m)) {
      if (!n.is_proper()) continue;
      const auto decs = enumerate_reduced_decompositions(n);
      if (decs.empty()) continue;
      ++elements;
      std::vector<Ideal> isolated;
      for (const auto& P : decs[0].radicals) {
        bool minimal = true;
        for (const auto& Q : decs[0].radicals) minimal = minimal && !(Q != P && Q.is_subset_of(P));
        if (minimal) isolated.push_back(P);
      }
      for (Mask pick = 0; pick < (Mask{1} << isolated.size()); ++pick) {
        ++subsets;
        std::vector<Ideal> chosen;
        Mask uni = 0;
        for (std::size_t i = 0; i < isolated.size(); ++i) {
          if (has(pick, static_cast<int>(i))) {
            chosen.push_back(isolated[i]);
            uni |= isolated[i].members();
          }
        }
        std::set<int> meets;
        for (const auto& d : decs) {
          Mask comps = 0;
          for (std::size_t i = 0; i < d.components.size(); ++i) {
            if (std::find(chosen.begin(), chosen.end(), d.radicals[i]) != chosen.end()) {
              comps |= bit(d.components[i].index());
            }
          }
          meets.insert(comps ? view.meet(comps) : m.top());
        }
        const Mask S = R.all() & ~uni;
        Mask below = 0;
        for (int x = 0; x < m.size(); ++x) {
          for_each_bit(S, [&](int r) {
            if (view.leq(view.act(r, x), n.index())) below |= bit(x);
          });
        }
        const int n_s = view.join(below);
        const auto report = verify_second_uniqueness(n, chosen);
        if (meets.size() != 1 || *meets.begin() != n_s || !report.holds || report.s_component != n_s) {
          ++discrepancies;
          if (first.empty()) first = label + " " + m.name(n.index());
        }
      }
    }
  }
  Outcome o;
  o.pass = discrepancies == 0 && elements > 0;
  o.detail = std::to_string(elements) + " decomposable elements, " + std::to_string(subsets) +
             " isolated subsets, " + std::to_string(discrepancies) + " discrepancies";
  if (!first.empty()) o.detail += "; first at " + first;
  return o;
}

Outcome oracle_equivalence() {
  long searches = 0, actions = 0, discrepancies = 0;
  for (const auto& [label, s] : structures()) {
    const auto& m = *s.module;
    const oracle::ModuleView view{m.tables()};
    for (const auto& a : s.ring->ideals()) {
      for (int n = 0; n < m.size(); ++n) {
        ++actions;
        discrepancies += ideal_action(m, a, n).index() != oracle::ideal_action(view, a.members(), n);
      }
    }
    if (m.size() > 8) continue;
    for (const auto& n : submodule_elements(m)) {
      if (!n.is_proper()) continue;
      ++searches;
      std::vector<std::vector<int>> got;
      for (const auto& d : enumerate_reduced_decompositions(n)) got.push_back(d.indices());
      std::sort(got.begin(), got.end());
      const auto expected = oracle::reduced_decompositions(m.tables(), s.ring->tables(), n.index());
      const auto found = find_reduced_decomposition(n);
      const bool found_ok =
          found ? std::find(expected.begin(), expected.end(), found->indices()) != expected.end() : expected.empty();
      discrepancies += got != expected || !found_ok;
    }
  }
  Outcome o;
  o.pass = discrepancies == 0 && searches > 0;
  o.detail = std::to_string(searches) + " decomposition searches, " + std::to_string(actions) +
             " ideal actions, " + std::to_string(discrepancies) + " discrepancies";
  return o;
}

Outcome cli_contract() {
  std::ifstream schema_in(LEMOD_SCHEMA_PATH);
  const testing::SchemaChecker checker(nlohmann::json::parse(schema_in));
  std::vector<std::string> problems;

  struct Case {
    std::vector<std::string> args;
    int expected;
  };
  const auto tmp = (std::filesystem::temp_directory_path() / "lemod_acceptance_generated.json").string();
  const std::vector<Case> cases = {
      {{"validate", fixture("z12.json")}, kExitOk},
      {{"validate", fixture("bad_action.json")}, kExitViolation},
      {{"verify", fixture("bad_action.json")}, kExitViolation},
      {{"validate", fixture("malformed.json")}, kExitUsage},
      {{"verify", fixture("capacity.json")}, kExitCapacity},
      {{"classify", fixture("z12.json")}, kExitOk},
      {{"decompose", fixture("z12.json"), "--element", "0_M", "--all"}, kExitOk},
      {{"verify", fixture("z12.json")}, kExitOk},
      {{"verify", fixture("z12.json"), "--element", "<4>"}, kExitOk},
      {{"s-component", fixture("z12.json"), "--element", "0_M", "--set", "1,3,5,7,9,11"}, kExitOk},
      {{"generate", "--kind", "submodule-lattice", "--n", "12", "-o", tmp}, kExitOk},
      {{"generate", "--kind", "random", "--seed", "4"}, kExitOk},
      {{"decompose", fixture("z12.json"), "--element", "nowhere"}, kExitUsage},
  };
  std::set<int> exit_classes;
  for (const auto& c : cases) {
    for (bool json : {false, true}) {
      std::vector<std::string> args = c.args;
      if (json) args.insert(args.begin(), "--json");
      std::ostringstream out, err;
      const int code = run_cli(args, out, err);
      const std::string line = (json ? "--json " : "") + args[json ? 1 : 0] + " " + (args.size() > 2 ? args[2] : "");
      if (code != c.expected) problems.push_back(line + ": exit " + std::to_string(code));
      exit_classes.insert(code);
      if (!json) continue;
      try {
        const auto errors = checker.check(nlohmann::json::parse(out.str()));
        if (!errors.empty()) problems.push_back(line + ": " + errors.front());
      } catch (const std::exception& e) {
        problems.push_back(line + ": unparsable output");
      }
    }
  }
  {
    std::ostringstream out, err;
    run_cli({"decompose", fixture("z12.json"), "--element", "0_M"}, out, err);
    if (out.str().rfind("0_M = ⟨4⟩ ∧ ⟨3⟩; associated primes {(2),(3)}, both isolated\n", 0) != 0) {
      problems.push_back("decompose text");
    }
  }

  int round_trips = 0;
  for (const auto& path : {fixture("z12.json"), fixture("bad_action.json"), fixture("capacity.json"), tmp}) {
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    const auto parsed = parse_structure(text.str());
    if (serialize_structure(parsed) != text.str() || parse_structure(serialize_structure(parsed)) != parsed) {
      problems.push_back("round trip " + path);
    }
    ++round_trips;
  }
  std::filesystem::remove(tmp);

  Outcome o;
  o.pass = problems.empty() && exit_classes == std::set<int>{0, 1, 2, 3};
  o.detail = std::to_string(cases.size() * 2) + " invocations, exit classes {0,1,2,3} " +
             (exit_classes == std::set<int>{0, 1, 2, 3} ? "covered" : "incomplete") + ", " +
             std::to_string(round_trips) + " fixture round trips, " + std::to_string(problems.size()) + " problems";
  if (!problems.empty()) o.detail += "; first: " + problems.front();
  return o;
}

}  // namespace
}  // namespace lemod

int main() {
  using namespace lemod;
  const std::vector<Criterion> criteria = {
      {1, "axiom suite", 10, axiom_suite},
      {2, "law suite", 60, [] { return group_suite([](const LeModule& m) { return law_properties(m); }, 20, false); }},
      {3, "classification suite", 0,
       [] { return group_suite([](const LeModule& m) { return classification_properties(m); }, 0, true); }},
      {4, "golden Z12 submodule lattice", 0, golden_z12},
      {5, "first uniqueness", 0, first_uniqueness},
      {6, "second uniqueness", 0, second_uniqueness},
      {7, "oracle equivalence", 120, oracle_equivalence},
      {8, "CLI contract", 0, cli_contract},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    // The corpus is built on first use inside criterion 1; its cost is charged there.
    const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::ostringstream timing;
    timing.precision(3);
    timing << std::fixed << seconds << " s";
    if (c.limit_seconds > 0) timing << " of " << c.limit_seconds << " s";
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << " " << c.title << ": " << o.detail << " ("
              << timing.str() << (in_time ? "" : ", over time") << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
