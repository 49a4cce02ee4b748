#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lemod/finite_ring.hpp"
#include "lemod/le_module.hpp"
#include "lemod/models.hpp"

namespace lemod {

struct ZnRing {
  int n = 0;
  friend bool operator==(const ZnRing&, const ZnRing&) = default;
};
using RingDescription = std::variant<ZnRing, RawRing>;

struct SubmoduleLatticeDirective {
  int n = 0;
  friend bool operator==(const SubmoduleLatticeDirective&, const SubmoduleLatticeDirective&) = default;
};
struct ChainDirective {
  int n = 0;
  int p = 0;
  int length = 0;
  friend bool operator==(const ChainDirective&, const ChainDirective&) = default;
};
struct RandomDirective {
  std::uint64_t seed = 0;
  int max_ring = 0;
  int max_module = 0;
  friend bool operator==(const RandomDirective&, const RandomDirective&) = default;
};
using GeneratorDirective = std::variant<SubmoduleLatticeDirective, ChainDirective, RandomDirective>;
using ModuleDescription = std::variant<RawModule, GeneratorDirective>;

/// On-disk structure. `ring` may be omitted only for generator directives.
struct StructureFile {
  std::optional<RingDescription> ring;
  ModuleDescription module;

  friend bool operator==(const StructureFile&, const StructureFile&) = default;
};

/// Throws FormatError with a JSON path on malformed text, wrong types, unknown
/// fields, inconsistent table shapes or out-of-range indices. Axioms are not
/// checked here.
StructureFile parse_structure(std::string_view text);
std::string serialize_structure(const StructureFile& file);

StructureFile read_structure_file(const std::string& path);
void write_structure_file(const std::string& path, const StructureFile& file);

struct Caps {
  int ring = kDefaultRingCap;
  int module = kDefaultModuleCap;
};

/// Validated form of a file. A null pointer comes with its violations; the
/// module is not attempted when the ring fails.
struct Realized {
  RingPtr ring;
  std::vector<Violation> ring_violations;
  ModulePtr module;
  std::vector<Violation> module_violations;
  RawRing raw_ring;
  RawModule raw_module;

  bool ok() const { return ring && module; }
};

/// Expands generator directives and validates. A ring given next to a
/// directive must equal the generated one (FormatError at $.ring otherwise).
Realized realize(const StructureFile& file, const Caps& caps = {});

/// Explicit-table description of a validated structure; Z/nZ rings are
/// written in the short form.
StructureFile describe(const Structure& s);

RawRing ring_tables(const RingDescription& ring);
Structure generate(const GeneratorDirective& directive, const Caps& caps = {});

}  // namespace lemod
