#include "lemod/structure_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

#include "lemod/errors.hpp"

namespace lemod {

using Json = nlohmann::ordered_json;

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void only_fields(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw FormatError("expected an object", path);
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw FormatError("unknown field \"" + key + "\"", path + "." + key);
  }
}

const Json& field(const Json& j, const std::string& path, const char* name) {
  if (!j.contains(name)) throw FormatError("missing field", path + "." + name);
  return j.at(name);
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw FormatError("expected an integer", path);
  const auto v = j.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) throw FormatError("integer out of range", path);
  return static_cast<int>(v);
}

int as_index(const Json& j, const std::string& path, int size) {
  const int v = as_int(j, path);
  if (v < 0 || v >= size) {
    throw FormatError("index " + std::to_string(v) + " outside 0.." + std::to_string(size - 1), path);
  }
  return v;
}

int as_size(const Json& j, const std::string& path) {
  const int v = as_int(j, path);
  if (v < 1) throw FormatError("size must be positive", path);
  return v;
}

Table index_table(const Json& j, const std::string& path, int rows, int cols, int range) {
  if (!j.is_array()) throw FormatError("expected an array", path);
  if (static_cast<int>(j.size()) != rows) {
    throw FormatError("expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()), path);
  }
  Table out(rows);
  for (int r = 0; r < rows; ++r) {
    const auto row_path = at(path, r);
    const Json& row = j[r];
    if (!row.is_array()) throw FormatError("expected an array", row_path);
    if (static_cast<int>(row.size()) != cols) {
      throw FormatError("expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()),
                        row_path);
    }
    for (int c = 0; c < cols; ++c) out[r].push_back(as_index(row[c], at(row_path, c), range));
  }
  return out;
}

BoolTable bool_table(const Json& j, const std::string& path, int size) {
  if (!j.is_array() || static_cast<int>(j.size()) != size) {
    throw FormatError("expected " + std::to_string(size) + " rows", path);
  }
  BoolTable out(size);
  for (int r = 0; r < size; ++r) {
    const auto row_path = at(path, r);
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != size) {
      throw FormatError("expected " + std::to_string(size) + " entries", row_path);
    }
    for (int c = 0; c < size; ++c) {
      if (!row[c].is_boolean()) throw FormatError("expected a boolean", at(row_path, c));
      out[r].push_back(row[c].get<bool>());
    }
  }
  return out;
}

RingDescription parse_ring(const Json& j) {
  const std::string path = "$.ring";
  if (!j.is_object()) throw FormatError("expected an object", path);
  const Json& kind = field(j, path, "kind");
  if (kind == "Zn") {
    only_fields(j, path, {"kind", "n"});
    return ZnRing{as_size(field(j, path, "n"), path + ".n")};
  }
  if (kind == "table") {
    only_fields(j, path, {"kind", "size", "add", "mul", "zero", "one"});
    RawRing r;
    r.size = as_size(field(j, path, "size"), path + ".size");
    r.add = index_table(field(j, path, "add"), path + ".add", r.size, r.size, r.size);
    r.mul = index_table(field(j, path, "mul"), path + ".mul", r.size, r.size, r.size);
    r.zero = as_index(field(j, path, "zero"), path + ".zero", r.size);
    r.one = as_index(field(j, path, "one"), path + ".one", r.size);
    return r;
  }
  throw FormatError("kind must be \"Zn\" or \"table\"", path + ".kind");
}

GeneratorDirective parse_directive(const Json& j) {
  const std::string path = "$.module.generate";
  if (!j.is_object()) throw FormatError("expected an object", path);
  const Json& kind = field(j, path, "kind");
  if (kind == "submodule-lattice") {
    only_fields(j, path, {"kind", "n"});
    return SubmoduleLatticeDirective{as_int(field(j, path, "n"), path + ".n")};
  }
  if (kind == "chain") {
    only_fields(j, path, {"kind", "n", "p", "length"});
    return ChainDirective{as_int(field(j, path, "n"), path + ".n"), as_int(field(j, path, "p"), path + ".p"),
                          as_int(field(j, path, "length"), path + ".length")};
  }
  if (kind == "random") {
    only_fields(j, path, {"kind", "seed", "max_ring", "max_module"});
    const Json& seed = field(j, path, "seed");
    if (!seed.is_number_integer() || (seed.is_number_integer() && !seed.is_number_unsigned() && seed.get<std::int64_t>() < 0)) {
      throw FormatError("expected a non-negative integer", path + ".seed");
    }
    return RandomDirective{seed.get<std::uint64_t>(), as_int(field(j, path, "max_ring"), path + ".max_ring"),
                           as_int(field(j, path, "max_module"), path + ".max_module")};
  }
  throw FormatError("kind must be \"submodule-lattice\", \"chain\" or \"random\"", path + ".kind");
}

RawModule parse_module_tables(const Json& j, std::optional<int> ring_size) {
  const std::string path = "$.module";
  only_fields(j, path, {"size", "names", "leq", "add", "zero", "top", "action"});
  RawModule m;
  m.size = as_size(field(j, path, "size"), path + ".size");
  if (j.contains("names")) {
    const Json& names = j.at("names");
    if (!names.is_array() || static_cast<int>(names.size()) != m.size) {
      throw FormatError("expected " + std::to_string(m.size) + " names", path + ".names");
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!names[i].is_string()) throw FormatError("expected a string", at(path + ".names", i));
      m.names.push_back(names[i].get<std::string>());
    }
  }
  m.leq = bool_table(field(j, path, "leq"), path + ".leq", m.size);
  m.add = index_table(field(j, path, "add"), path + ".add", m.size, m.size, m.size);
  m.zero = as_index(field(j, path, "zero"), path + ".zero", m.size);
  m.top = as_index(field(j, path, "top"), path + ".top", m.size);
  const Json& action = field(j, path, "action");
  if (!action.is_array()) throw FormatError("expected an array", path + ".action");
  const int rows = ring_size.value_or(static_cast<int>(action.size()));
  m.action = index_table(action, path + ".action", rows, m.size, m.size);
  return m;
}

Json ring_json(const RingDescription& ring) {
  if (const auto* zn = std::get_if<ZnRing>(&ring)) return Json{{"kind", "Zn"}, {"n", zn->n}};
  const auto& r = std::get<RawRing>(ring);
  return Json{{"kind", "table"}, {"size", r.size}, {"add", r.add}, {"mul", r.mul}, {"zero", r.zero}, {"one", r.one}};
}

Json directive_json(const GeneratorDirective& d) {
  return std::visit(
      [](const auto& g) -> Json {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SubmoduleLatticeDirective>) {
          return Json{{"kind", "submodule-lattice"}, {"n", g.n}};
        } else if constexpr (std::is_same_v<T, ChainDirective>) {
          return Json{{"kind", "chain"}, {"n", g.n}, {"p", g.p}, {"length", g.length}};
        } else {
          return Json{{"kind", "random"}, {"seed", g.seed}, {"max_ring", g.max_ring}, {"max_module", g.max_module}};
        }
      },
      d);
}

Json module_json(const RawModule& m) {
  Json j{{"size", m.size}};
  if (!m.names.empty()) j["names"] = m.names;
  Json leq = Json::array();
  for (const auto& row : m.leq) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b);
    leq.push_back(std::move(r));
  }
  j["leq"] = std::move(leq);
  j["add"] = m.add;
  j["zero"] = m.zero;
  j["top"] = m.top;
  j["action"] = m.action;
  return j;
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what(), "$");
  }
  only_fields(root, "$", {"ring", "module"});
  StructureFile file;
  std::optional<int> ring_size;
  if (root.contains("ring")) {
    file.ring = parse_ring(root.at("ring"));
    ring_size = std::visit(
        [](const auto& r) {
          if constexpr (std::is_same_v<std::decay_t<decltype(r)>, ZnRing>) {
            return r.n;
          } else {
            return r.size;
          }
        },
        *file.ring);
  }
  const Json& module = field(root, "$", "module");
  if (!module.is_object()) throw FormatError("expected an object", "$.module");
  if (module.contains("generate")) {
    only_fields(module, "$.module", {"generate"});
    file.module = parse_directive(module.at("generate"));
  } else {
    if (!file.ring) throw FormatError("missing field (required with explicit module tables)", "$.ring");
    file.module = parse_module_tables(module, ring_size);
  }
  return file;
}

std::string serialize_structure(const StructureFile& file) {
  Json root = Json::object();
  if (file.ring) root["ring"] = ring_json(*file.ring);
  if (const auto* d = std::get_if<GeneratorDirective>(&file.module)) {
    root["module"] = Json{{"generate", directive_json(*d)}};
  } else {
    root["module"] = module_json(std::get<RawModule>(file.module));
  }
  return root.dump(2) + "\n";
}

StructureFile read_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_structure(buffer.str());
}

void write_structure_file(const std::string& path, const StructureFile& file) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << serialize_structure(file);
  if (!out) throw UsageError("failed writing " + path);
}

RawRing ring_tables(const RingDescription& ring) {
  if (const auto* zn = std::get_if<ZnRing>(&ring)) {
    if (zn->n > kMaxElements) {
      throw CapacityError("ring size " + std::to_string(zn->n) + " exceeds the 64-element limit");
    }
    return zn_tables(zn->n);
  }
  return std::get<RawRing>(ring);
}

Structure generate(const GeneratorDirective& directive, const Caps& caps) {
  return std::visit(
      [&](const auto& g) -> Structure {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SubmoduleLatticeDirective>) {
          return generate_submodule_lattice(g.n, caps.ring);
        } else if constexpr (std::is_same_v<T, ChainDirective>) {
          if (g.length > caps.module) {
            throw CapacityError("chain length " + std::to_string(g.length) + " exceeds the module cap " +
                                std::to_string(caps.module));
          }
          return generate_chain(g.n, g.p, g.length, caps.ring);
        } else {
          if (g.max_ring > caps.ring || g.max_module > caps.module) {
            throw CapacityError("random bounds exceed the configured caps");
          }
          return generate_random(g.seed, g.max_ring, g.max_module);
        }
      },
      directive);
}

Realized realize(const StructureFile& file, const Caps& caps) {
  Realized out;
  if (const auto* d = std::get_if<GeneratorDirective>(&file.module)) {
    const Structure s = generate(*d, caps);
    if (file.ring && ring_tables(*file.ring) != s.ring->tables()) {
      throw FormatError("ring does not match the generated ring", "$.ring");
    }
    out.ring = s.ring;
    out.module = s.module;
    out.raw_ring = s.ring->tables();
    out.raw_module = s.module->tables();
    return out;
  }
  out.raw_ring = ring_tables(*file.ring);
  out.raw_module = std::get<RawModule>(file.module);
  auto ring = validate_ring(out.raw_ring, caps.ring);
  out.ring_violations = ring.violations;
  if (!ring.ok()) return out;
  out.ring = ring.ring;
  auto module = validate_le_module(out.raw_module, out.ring, caps.module);
  out.module_violations = module.violations;
  out.module = module.module;
  return out;
}

StructureFile describe(const Structure& s) {
  StructureFile file;
  const RawRing& r = s.ring->tables();
  if (r == zn_tables(r.size)) {
    file.ring = ZnRing{r.size};
  } else {
    file.ring = r;
  }
  file.module = s.module->tables();
  return file;
}

}  // namespace lemod
