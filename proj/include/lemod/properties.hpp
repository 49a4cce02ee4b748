#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lemod/decomposition.hpp"
#include "lemod/finite_ring.hpp"
#include "lemod/le_module.hpp"

namespace lemod {

/// Outcome of one quantified property. `informational` counts instances that
/// are logged rather than failed (for example a converse that need not hold).
struct PropertyResult {
  std::string name;
  std::string group;
  long checked = 0;
  long failures = 0;
  std::optional<std::string> first_failure;
  long informational = 0;
  std::optional<std::string> first_informational;

  bool holds() const { return failures == 0; }
};

struct SuiteReport {
  std::vector<PropertyResult> results;

  long failures() const;
  bool holds() const { return failures() == 0; }
  /// Null when no property has this name.
  const PropertyResult* find(const std::string& name) const;
};

struct SuiteOptions {
  SearchOptions search;
  /// Restricts the quantified target element (n, q or p) to one element.
  std::optional<int> element;
};

/// Groups, in the order the full suite runs them.
inline const std::vector<std::string> kPropertyGroups = {"ring", "laws", "classification", "decomposition"};

std::vector<PropertyResult> ring_properties(const FiniteRing& ring);
std::vector<PropertyResult> law_properties(const LeModule& m, const SuiteOptions& options = {});
std::vector<PropertyResult> classification_properties(const LeModule& m, const SuiteOptions& options = {});
/// Throws CapacityError when a candidate pool exceeds options.search.max_pool.
std::vector<PropertyResult> decomposition_properties(const LeModule& m, const SuiteOptions& options = {});

/// Every group in the order of kPropertyGroups.
SuiteReport run_property_suite(const LeModule& m, const SuiteOptions& options = {});

}  // namespace lemod
