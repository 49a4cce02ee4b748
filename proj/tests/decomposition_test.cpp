#include <gtest/gtest.h>

#include "lemod/decomposition.hpp"
#include "lemod/errors.hpp"
#include "support.hpp"

namespace lemod {
namespace {

using testing::element;
using testing::z12;

struct Z12 : ::testing::Test {
  const LeModule& m = *z12().module;
  const FiniteRing& R = *z12().ring;
  int e(const char* name) const { return element(m, name); }
  SubmoduleElement sub(const char* name) const { return submodule_element(m, e(name)); }
  Ideal id(int g) const { return principal_ideal(R, g); }
  std::vector<int> idx(std::initializer_list<const char*> names) const {
    std::vector<int> out;
    for (const char* n : names) out.push_back(e(n));
    std::sort(out.begin(), out.end());
    return out;
  }
};

std::vector<int> indices_of(const std::vector<SubmoduleElement>& xs) {
  std::vector<int> out;
  for (const auto& x : xs) out.push_back(x.index());
  return out;
}

TEST_F(Z12, PrimaryElementsAbove) {
  EXPECT_EQ(indices_of(primary_elements_above(sub("⟨0⟩"))), idx({"⟨2⟩", "⟨3⟩", "⟨4⟩"}));
  EXPECT_EQ(indices_of(primary_elements_above(sub("⟨4⟩"))), idx({"⟨2⟩", "⟨4⟩"}));
}

TEST_F(Z12, FindReducedDecomposition) {
  const auto zero = find_reduced_decomposition(sub("⟨0⟩"));
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->indices(), idx({"⟨4⟩", "⟨3⟩"}));
  EXPECT_TRUE(zero->reduced);
  std::vector<Ideal> rads = zero->radicals;
  std::sort(rads.begin(), rads.end());
  EXPECT_EQ(rads, (std::vector<Ideal>{id(3), id(2)}));

  const auto six = find_reduced_decomposition(sub("⟨6⟩"));
  ASSERT_TRUE(six);
  EXPECT_EQ(six->indices(), idx({"⟨2⟩", "⟨3⟩"}));

  const auto four = find_reduced_decomposition(sub("⟨4⟩"));
  ASSERT_TRUE(four);
  EXPECT_EQ(four->indices(), idx({"⟨4⟩"}));
  EXPECT_THROW(find_reduced_decomposition(sub("⟨1⟩")), UsageError);
}

TEST_F(Z12, Enumerate) {
  const auto zero = enumerate_reduced_decompositions(sub("⟨0⟩"));
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].indices(), idx({"⟨4⟩", "⟨3⟩"}));
  const auto two = enumerate_reduced_decompositions(sub("⟨2⟩"));
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].indices(), idx({"⟨2⟩"}));
  EXPECT_THROW(enumerate_reduced_decompositions(sub("⟨0⟩"), SearchOptions{2}), CapacityError);
}

TEST_F(Z12, MakeDecompositionChecks) {
  EXPECT_THROW(make_decomposition(sub("⟨0⟩"), {sub("⟨2⟩"), sub("⟨3⟩")}), UsageError);
  EXPECT_THROW(make_decomposition(sub("⟨6⟩"), {sub("⟨6⟩")}), UsageError);
  const auto unreduced = make_decomposition(sub("⟨0⟩"), {sub("⟨2⟩"), sub("⟨4⟩"), sub("⟨3⟩")});
  EXPECT_FALSE(unreduced.reduced);
  EXPECT_THROW(associated_primes(unreduced), UsageError);
}

TEST_F(Z12, Laskerian) {
  const auto report = is_laskerian(m);
  EXPECT_TRUE(report.holds);
  EXPECT_EQ(report.checked, 5);
}

TEST(Laskerian, TrivialModuleVacuous) {
  const auto s = generate_random(3, 8, 1);
  const auto report = is_laskerian(*s.module);
  EXPECT_TRUE(report.holds);
  EXPECT_EQ(report.checked, 0);
}

TEST(Laskerian, EveryCorpusModuleIsLaskerian) {
  // Finite rings split into local factors, so no counterexample can occur.
  for (const auto& [label, s] : testing::corpus()) {
    const auto report = is_laskerian(*s.module);
    EXPECT_TRUE(report.holds) << label;
    EXPECT_FALSE(report.counterexample) << label;
  }
}

TEST_F(Z12, AssociatedAndMinimalPrimes) {
  const auto d = *find_reduced_decomposition(sub("⟨0⟩"));
  const auto ap = associated_primes(d);
  EXPECT_EQ(ap.primes, (std::vector<Ideal>{id(3), id(2)}));
  EXPECT_EQ(ap.isolated, (std::vector<bool>{true, true}));
  const auto four = associated_primes(*find_reduced_decomposition(sub("⟨4⟩")));
  EXPECT_EQ(four.primes, std::vector<Ideal>{id(2)});
  EXPECT_EQ(four.isolated, std::vector<bool>{true});

  EXPECT_EQ(minimal_prime_divisors(sub("⟨0⟩")), (std::vector<Ideal>{id(3), id(2)}));
  EXPECT_EQ(minimal_prime_divisors(sub("⟨4⟩")), std::vector<Ideal>{id(2)});
  EXPECT_EQ(minimal_prime_divisors(sub("⟨2⟩")), std::vector<Ideal>{id(2)});
}

TEST_F(Z12, SComponent) {
  const std::vector<Ideal> two{id(2)};
  const auto odds = complement_of_prime_union(R, two);
  EXPECT_EQ(s_component(sub("⟨0⟩"), odds).index(), e("⟨4⟩"));
  const auto one = mult_closed_set(R, bit(1));
  for (const auto& n : submodule_elements(m)) EXPECT_EQ(s_component(n, one), n);
  const auto everything = mult_closed_set(R, R.all());
  EXPECT_EQ(s_component(sub("⟨0⟩"), everything).index(), m.top());
}

TEST_F(Z12, IsolatedComponentFormula) {
  EXPECT_EQ(isolated_component_formula(sub("⟨0⟩"), id(2)).index(), e("⟨4⟩"));
  EXPECT_EQ(isolated_component_formula(sub("⟨0⟩"), id(3)).index(), e("⟨3⟩"));
  EXPECT_EQ(isolated_component_formula(sub("⟨3⟩"), id(2)).index(), m.top());
  EXPECT_THROW(isolated_component_formula(sub("⟨0⟩"), id(4)), UsageError);
}

TEST_F(Z12, FirstUniqueness) {
  const auto r = verify_first_uniqueness(sub("⟨0⟩"));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.decomposition_primes, (std::vector<Ideal>{id(3), id(2)}));
  EXPECT_EQ(r.transporter_primes, r.decomposition_primes);
  EXPECT_EQ(r.witnesses, (std::vector<int>{e("⟨4⟩"), e("⟨3⟩")}));

  const auto four = verify_first_uniqueness(sub("⟨4⟩"));
  EXPECT_TRUE(four.holds);
  EXPECT_EQ(four.transporter_primes, std::vector<Ideal>{id(2)});

  const auto six = verify_first_uniqueness(sub("⟨6⟩"));
  EXPECT_TRUE(six.holds);
  EXPECT_EQ(six.transporter_primes, (std::vector<Ideal>{id(3), id(2)}));
}

TEST_F(Z12, SecondUniqueness) {
  const std::vector<Ideal> two{id(2)};
  const auto r = verify_second_uniqueness(sub("⟨0⟩"), two);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.meets, std::vector<int>{e("⟨4⟩")});
  EXPECT_EQ(r.s_component, e("⟨4⟩"));

  const std::vector<Ideal> both{id(2), id(3)};
  EXPECT_EQ(verify_second_uniqueness(sub("⟨0⟩"), both).s_component, m.zero());

  const std::vector<Ideal> three{id(3)};
  const auto six = verify_second_uniqueness(sub("⟨6⟩"), three);
  EXPECT_TRUE(six.holds);
  EXPECT_EQ(six.s_component, e("⟨3⟩"));

  const std::vector<Ideal> none;
  EXPECT_EQ(verify_second_uniqueness(sub("⟨0⟩"), none).s_component, m.top());
  const std::vector<Ideal> not_divisor{id(4)};
  EXPECT_THROW(verify_second_uniqueness(sub("⟨0⟩"), not_divisor), UsageError);
}

TEST_F(Z12, Saturation) {
  EXPECT_TRUE(saturation_fixpoint_check(sub("⟨0⟩"), 5));
  EXPECT_FALSE(saturation_fixpoint_check(sub("⟨0⟩"), 2));
  for (const auto& n : submodule_elements(m)) EXPECT_TRUE(saturation_fixpoint_check(n, 1));
}

TEST(DecompositionOracle, PrunedSearchMatchesExhaustiveSubsets) {
  int checked = 0;
  for (const auto& [label, s] : testing::corpus()) {
    const auto& m = *s.module;
    if (m.size() > 8) continue;
    for (const auto& n : submodule_elements(m)) {
      if (!n.is_proper()) continue;
      const auto expected = testing::oracle::reduced_decompositions(m.tables(), s.ring->tables(), n.index());
      std::vector<std::vector<int>> got;
      for (const auto& d : enumerate_reduced_decompositions(n)) got.push_back(d.indices());
      std::sort(got.begin(), got.end());
      ASSERT_EQ(got, expected) << label << " " << m.name(n.index());
      const auto found = find_reduced_decomposition(n);
      ASSERT_EQ(found.has_value(), !expected.empty()) << label;
      if (found) {
        EXPECT_NE(std::find(expected.begin(), expected.end(), found->indices()), expected.end()) << label;
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace lemod
