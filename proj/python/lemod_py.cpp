#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

#include "lemod/cli.hpp"
#include "lemod/decomposition.hpp"
#include "lemod/errors.hpp"
#include "lemod/primary.hpp"
#include "lemod/properties.hpp"
#include "lemod/structure_io.hpp"

namespace py = pybind11;

namespace {

using namespace lemod;

py::list members(const Ideal& i) { return py::cast(i.elements()); }

py::dict ideal_dict(const Ideal& i) {
  py::dict d;
  d["label"] = ideal_label(i);
  d["members"] = members(i);
  return d;
}

py::dict violation_dict(const char* structure, const Violation& v) {
  py::dict d;
  d["structure"] = structure;
  d["axiom"] = v.axiom;
  d["witness"] = v.witness;
  d["detail"] = v.detail;
  return d;
}

// A validated ring and le-module pair.
class PyStructure {
 public:
  explicit PyStructure(Structure s) : s_(std::move(s)) {}

  static PyStructure from_file(const StructureFile& file) {
    const auto r = realize(file);
    if (!r.ok()) {
      const bool ring_failed = !r.ring_violations.empty();
      const Violation& v = ring_failed ? r.ring_violations.front() : r.module_violations.front();
      throw UsageError("structure violates " + v.axiom + ": " + v.detail);
    }
    return PyStructure(Structure{r.ring, r.module});
  }

  int ring_size() const { return s_.ring->size(); }
  int size() const { return s_.module->size(); }
  std::vector<std::string> names() const { return s_.module->names(); }
  int zero() const { return s_.module->zero(); }
  int top() const { return s_.module->top(); }

  int element(const py::object& key) const {
    if (py::isinstance<py::int_>(key)) {
      const int x = key.cast<int>();
      if (x < 0 || x >= size()) throw UsageError("element index out of range");
      return x;
    }
    std::ostringstream err;
    return resolve_element(*s_.module, key.cast<std::string>(), err);
  }

  std::string to_json() const { return serialize_structure(describe(s_)); }

  py::list classify() const {
    py::list out;
    for (const auto& c : classify_all(*s_.module)) {
      py::dict row;
      row["index"] = c.element.index();
      row["name"] = s_.module->name(c.element.index());
      row["primary"] = c.is_primary;
      row["prime"] = c.is_prime_submodule;
      row["radical"] = ideal_dict(c.radical);
      out.append(row);
    }
    return out;
  }

  py::list decompose(const py::object& key, bool all, int max_pool) const {
    const auto n = submodule_element(*s_.module, element(key));
    std::vector<PrimaryDecomposition> decs;
    if (all) {
      decs = enumerate_reduced_decompositions(n, SearchOptions{max_pool});
    } else if (auto d = find_reduced_decomposition(n)) {
      decs.push_back(std::move(*d));
    }
    py::list out;
    for (const auto& d : decs) {
      std::vector<std::size_t> order(d.components.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return display_before(d.radicals[a], d.radicals[b]); });
      py::list components, radicals;
      for (std::size_t i : order) {
        components.append(s_.module->name(d.components[i].index()));
        radicals.append(ideal_dict(d.radicals[i]));
      }
      const auto ap = associated_primes(d);
      py::list primes;
      std::vector<std::size_t> prime_order(ap.primes.size());
      for (std::size_t i = 0; i < prime_order.size(); ++i) prime_order[i] = i;
      std::sort(prime_order.begin(), prime_order.end(),
                [&](std::size_t a, std::size_t b) { return display_before(ap.primes[a], ap.primes[b]); });
      for (std::size_t i : prime_order) {
        py::dict p = ideal_dict(ap.primes[i]);
        p["isolated"] = static_cast<bool>(ap.isolated[i]);
        primes.append(p);
      }
      py::dict entry;
      entry["components"] = components;
      entry["radicals"] = radicals;
      entry["associated_primes"] = primes;
      out.append(entry);
    }
    return out;
  }

  std::string s_component(const py::object& key, const std::vector<int>& set) const {
    const auto n = submodule_element(*s_.module, element(key));
    Mask m = 0;
    for (int s : set) {
      if (s < 0 || s >= ring_size()) throw UsageError("ring element out of range");
      m |= bit(s);
    }
    return s_.module->name(lemod::s_component(n, mult_closed_set(*s_.ring, m)).index());
  }

  std::string radical(const py::object& key) const {
    return ideal_label(radical_of_element(submodule_element(*s_.module, element(key))));
  }

  py::dict verify(const py::object& key, int max_pool) const {
    SuiteOptions options;
    options.search.max_pool = max_pool;
    if (!key.is_none()) options.element = element(key);
    const auto report = run_property_suite(*s_.module, options);
    py::list props;
    for (const auto& r : report.results) {
      py::dict p;
      p["name"] = r.name;
      p["group"] = r.group;
      p["checked"] = r.checked;
      p["failures"] = r.failures;
      p["first_failure"] = r.first_failure ? py::cast(*r.first_failure) : py::none();
      p["informational"] = r.informational;
      props.append(p);
    }
    py::dict out;
    out["ok"] = report.holds();
    out["failures"] = report.failures();
    out["properties"] = props;
    return out;
  }

 private:
  Structure s_;
};

py::list validate_text(const std::string& text) {
  const auto r = realize(parse_structure(text));
  py::list out;
  for (const auto& v : r.ring_violations) out.append(violation_dict("ring", v));
  for (const auto& v : r.module_violations) out.append(violation_dict("module", v));
  return out;
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite le-modules over finite commutative rings";

  auto base = py::register_exception<lemod::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<lemod::FormatError>(m, "FormatError", base.ptr());
  py::register_exception<lemod::UsageError>(m, "UsageError", base.ptr());
  py::register_exception<lemod::CapacityError>(m, "CapacityError", base.ptr());

  py::class_<PyStructure>(m, "Structure")
      .def_static("parse", [](const std::string& text) { return PyStructure::from_file(parse_structure(text)); },
                  py::arg("text"))
      .def_static("load", [](const std::string& path) { return PyStructure::from_file(read_structure_file(path)); },
                  py::arg("path"))
      .def_static("submodule_lattice", [](int n) { return PyStructure(generate_submodule_lattice(n)); },
                  py::arg("n"))
      .def_static("chain", [](int n, int p, int length) { return PyStructure(generate_chain(n, p, length)); },
                  py::arg("n"), py::arg("p"), py::arg("length"))
      .def_static("random",
                  [](std::uint64_t seed, int max_ring, int max_module) {
                    return PyStructure(generate_random(seed, max_ring, max_module));
                  },
                  py::arg("seed"), py::arg("max_ring") = 16, py::arg("max_module") = 8)
      .def_property_readonly("ring_size", &PyStructure::ring_size)
      .def_property_readonly("size", &PyStructure::size)
      .def_property_readonly("names", &PyStructure::names)
      .def_property_readonly("zero", &PyStructure::zero)
      .def_property_readonly("top", &PyStructure::top)
      .def("element", &PyStructure::element, py::arg("key"))
      .def("to_json", &PyStructure::to_json)
      .def("classify", &PyStructure::classify)
      .def("decompose", &PyStructure::decompose, py::arg("element"), py::arg("all") = false,
           py::arg("max_pool") = kDefaultPoolCap)
      .def("s_component", &PyStructure::s_component, py::arg("element"), py::arg("set"))
      .def("radical", &PyStructure::radical, py::arg("element"))
      .def("verify", &PyStructure::verify, py::arg("element") = py::none(), py::arg("max_pool") = kDefaultPoolCap);

  m.def("validate", &validate_text, py::arg("text"), "Axiom violations of a structure file's text");
  m.def("run_cli", &cli, py::arg("args"), "Runs a command line; returns (exit code, stdout, stderr)");
}
