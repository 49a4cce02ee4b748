#include "lemod/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "lemod/decomposition.hpp"
#include "lemod/errors.hpp"
#include "lemod/primary.hpp"
#include "lemod/properties.hpp"
#include "lemod/structure_io.hpp"

namespace lemod {

using Json = nlohmann::ordered_json;

namespace {

std::optional<int> parse_index(const std::string& token) {
  int v = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end || token.empty()) return std::nullopt;
  return v;
}

std::optional<int> find_name(const LeModule& m, const std::string& name) {
  const auto& names = m.names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<int>(it - names.begin());
}

std::string angle_form(const std::string& token) {
  if (token.size() < 2 || token.front() != '<' || token.back() != '>') return {};
  return "⟨" + token.substr(1, token.size() - 2) + "⟩";
}

struct Options {
  bool json = false;
  int max_pool = kDefaultPoolCap;
  std::string file;
  std::string element;
  bool all = false;
  std::vector<int> set;
  std::string kind = "submodule-lattice";
  int n = 12;
  int p = 2;
  int length = 3;
  std::uint64_t seed = 1;
  int max_ring = 16;
  int max_module = 8;
  std::string output;
};

Json ideal_json(const Ideal& i) { return Json{{"label", ideal_label(i)}, {"members", i.elements()}}; }

Json element_json(const LeModule& m, int x) { return Json{{"index", x}, {"name", m.name(x)}}; }

std::string join_labels(const std::vector<Ideal>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + ideal_label(xs[i]);
  return out + "}";
}

std::string witness_text(const std::vector<int>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + std::to_string(w[i]);
  return out + ")";
}

Json violation_json(const char* structure, const Violation& v) {
  return Json{{"structure", structure}, {"axiom", v.axiom}, {"witness", v.witness}, {"detail", v.detail}};
}

class Session {
 public:
  Session(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int validate() {
    const auto r = load();
    Json violations = Json::array();
    for (const auto& v : r.ring_violations) violations.push_back(violation_json("ring", v));
    for (const auto& v : r.module_violations) violations.push_back(violation_json("module", v));
    if (o_.json) {
      Json report{{"verb", "validate"}, {"ok", r.ok()}};
      report["ring_size"] = r.ring ? Json(r.ring->size()) : Json(nullptr);
      report["module_size"] = r.module ? Json(r.module->size()) : Json(nullptr);
      report["violations"] = violations;
      emit(report);
    } else if (r.ok()) {
      out_ << "all axioms hold\n";
      out_ << "ring: " << r.ring->size() << " elements; module: " << r.module->size() << " elements\n";
    } else {
      for (const auto& v : violations) {
        out_ << v["structure"].get<std::string>() << " axiom " << v["axiom"].get<std::string>() << " fails at "
             << witness_text(v["witness"].get<std::vector<int>>()) << ": " << v["detail"].get<std::string>() << "\n";
      }
    }
    return r.ok() ? kExitOk : kExitViolation;
  }

  int classify() {
    const auto r = load();
    if (!r.ok()) return invalid("classify", r);
    const LeModule& m = *r.module;
    const auto rows = classify_all(m);
    if (o_.json) {
      Json elements = Json::array();
      for (const auto& c : rows) {
        Json row = element_json(m, c.element.index());
        row["primary"] = c.is_primary;
        row["prime"] = c.is_prime_submodule;
        row["radical"] = ideal_json(c.radical);
        elements.push_back(row);
      }
      emit(Json{{"verb", "classify"}, {"ok", true}, {"module_size", m.size()}, {"elements", elements}});
      return kExitOk;
    }
    std::size_t width = 7;
    for (const auto& c : rows) width = std::max(width, display_width(m.name(c.element.index())));
    out_ << pad("element", width) << "  primary  prime  radical\n";
    for (const auto& c : rows) {
      out_ << pad(m.name(c.element.index()), width) << "  " << pad(c.is_primary ? "yes" : "no", 7) << "  "
           << pad(c.is_prime_submodule ? "yes" : "no", 5) << "  " << ideal_label(c.radical) << "\n";
    }
    const int skipped = m.size() - static_cast<int>(rows.size());
    if (skipped > 0) out_ << skipped << " element(s) are not submodule elements\n";
    return kExitOk;
  }

  int decompose() {
    const auto r = load();
    if (!r.ok()) return invalid("decompose", r);
    const LeModule& m = *r.module;
    const int x = element(m);
    const auto n = submodule_element(m, x);
    const std::string shown = target_label(m, x);

    std::vector<PrimaryDecomposition> decs;
    if (o_.all) {
      decs = enumerate_reduced_decompositions(n, SearchOptions{o_.max_pool});
    } else if (auto d = find_reduced_decomposition(n)) {
      decs.push_back(std::move(*d));
    }

    if (decs.empty()) {
      if (o_.json) {
        emit(Json{{"verb", "decompose"}, {"ok", false}, {"target", element_json(m, x)},
                  {"decompositions", Json::array()}, {"associated_primes", Json::array()},
                  {"minimal_primes", Json::array()}});
      } else {
        out_ << shown << " has no primary decomposition\n";
      }
      return kExitViolation;
    }

    const auto ap = associated_primes(decs.front());
    std::vector<std::size_t> prime_order(ap.primes.size());
    for (std::size_t i = 0; i < prime_order.size(); ++i) prime_order[i] = i;
    std::sort(prime_order.begin(), prime_order.end(),
              [&](std::size_t a, std::size_t b) { return display_before(ap.primes[a], ap.primes[b]); });
    auto minimal = minimal_prime_divisors(n);
    std::sort(minimal.begin(), minimal.end(), display_before);

    if (o_.json) {
      Json list = Json::array();
      for (const auto& d : decs) {
        Json components = Json::array(), indices = Json::array(), radicals = Json::array();
        for (std::size_t i : component_order(d)) {
          components.push_back(m.name(d.components[i].index()));
          indices.push_back(d.components[i].index());
          radicals.push_back(ideal_json(d.radicals[i]));
        }
        list.push_back(Json{{"components", components}, {"component_indices", indices}, {"radicals", radicals},
                            {"reduced", d.reduced}});
      }
      Json primes = Json::array();
      for (std::size_t i : prime_order) {
        Json p = ideal_json(ap.primes[i]);
        p["isolated"] = static_cast<bool>(ap.isolated[i]);
        primes.push_back(p);
      }
      Json mins = Json::array();
      for (const auto& p : minimal) mins.push_back(ideal_json(p));
      emit(Json{{"verb", "decompose"}, {"ok", true}, {"target", element_json(m, x)}, {"decompositions", list},
                {"associated_primes", primes}, {"minimal_primes", mins}});
      return kExitOk;
    }

    std::vector<Ideal> ordered, isolated, embedded;
    for (std::size_t i : prime_order) {
      ordered.push_back(ap.primes[i]);
      (ap.isolated[i] ? isolated : embedded).push_back(ap.primes[i]);
    }
    std::string isolation;
    if (embedded.empty()) {
      isolation = ordered.size() == 1 ? "isolated" : ordered.size() == 2 ? "both isolated" : "all isolated";
    } else {
      isolation = "isolated " + join_labels(isolated) + ", embedded " + join_labels(embedded);
    }
    for (std::size_t k = 0; k < decs.size(); ++k) {
      out_ << shown << " = ";
      const auto order = component_order(decs[k]);
      for (std::size_t i = 0; i < order.size(); ++i) {
        out_ << (i ? " ∧ " : "") << m.name(decs[k].components[order[i]].index());
      }
      if (k == 0) out_ << "; associated primes " << join_labels(ordered) << ", " << isolation;
      out_ << "\n";
    }
    out_ << "minimal prime divisors " << join_labels(minimal) << "\n";
    if (o_.all) out_ << decs.size() << " reduced decomposition(s)\n";
    return kExitOk;
  }

  int verify() {
    const auto r = load();
    if (!r.ok()) return invalid("verify", r);
    const LeModule& m = *r.module;
    SuiteOptions options;
    options.search.max_pool = o_.max_pool;
    if (!o_.element.empty()) options.element = element(m);
    const auto report = run_property_suite(m, options);

    long notes = 0;
    for (const auto& p : report.results) notes += p.informational;
    if (o_.json) {
      Json props = Json::array();
      for (const auto& p : report.results) {
        props.push_back(Json{{"name", p.name},
                             {"group", p.group},
                             {"checked", p.checked},
                             {"failures", p.failures},
                             {"first_failure", p.first_failure ? Json(*p.first_failure) : Json(nullptr)},
                             {"informational", p.informational},
                             {"first_informational",
                              p.first_informational ? Json(*p.first_informational) : Json(nullptr)}});
      }
      Json j{{"verb", "verify"}, {"ok", report.holds()}};
      j["element"] = options.element ? element_json(m, *options.element) : Json(nullptr);
      j["properties"] = props;
      j["failures"] = report.failures();
      j["informational"] = notes;
      emit(j);
    } else {
      std::size_t width = 0;
      for (const auto& p : report.results) width = std::max(width, p.name.size());
      for (const auto& p : report.results) {
        out_ << pad(p.group, 14) << "  " << pad(p.name, width) << "  " << (p.holds() ? "ok  " : "FAIL") << "  "
             << p.checked << " checked";
        if (!p.holds()) out_ << ", " << p.failures << " failed; first: " << *p.first_failure;
        if (p.informational) out_ << "; " << p.informational << " logged, first: " << *p.first_informational;
        out_ << "\n";
      }
      out_ << report.results.size() << " properties, " << report.failures() << " failure(s), " << notes
           << " logged instance(s)\n";
    }
    return report.holds() ? kExitOk : kExitViolation;
  }

  int s_component_verb() {
    const auto r = load();
    if (!r.ok()) return invalid("s-component", r);
    const LeModule& m = *r.module;
    const FiniteRing& R = m.ring();
    const int x = element(m);
    const auto n = submodule_element(m, x);
    Mask members = 0;
    for (int s : o_.set) {
      if (s < 0 || s >= R.size()) throw UsageError("ring element " + std::to_string(s) + " out of range");
      members |= bit(s);
    }
    const auto S = mult_closed_set(R, members);
    const int result = s_component(n, S).index();
    if (o_.json) {
      emit(Json{{"verb", "s-component"}, {"ok", true}, {"target", element_json(m, x)}, {"set", S.elements()},
                {"result", element_json(m, result)}});
    } else {
      out_ << "n_S = " << m.name(result) << " for n = " << target_label(m, x) << ", S = {";
      const auto members = S.elements();
      for (std::size_t i = 0; i < members.size(); ++i) out_ << (i ? "," : "") << members[i];
      out_ << "}\n";
    }
    return kExitOk;
  }

  int generate_verb() {
    GeneratorDirective directive;
    if (o_.kind == "submodule-lattice") {
      directive = SubmoduleLatticeDirective{o_.n};
    } else if (o_.kind == "chain") {
      directive = ChainDirective{o_.n, o_.p, o_.length};
    } else if (o_.kind == "random") {
      directive = RandomDirective{o_.seed, o_.max_ring, o_.max_module};
    } else {
      throw UsageError("unknown kind " + o_.kind + " (submodule-lattice, chain, random)");
    }
    const auto s = generate(directive);
    const auto file = describe(s);
    if (o_.output.empty() && !o_.json) {
      out_ << serialize_structure(file);
      return kExitOk;
    }
    if (!o_.output.empty()) write_structure_file(o_.output, file);
    if (o_.json) {
      Json j{{"verb", "generate"}, {"ok", true}, {"kind", o_.kind}};
      j["path"] = o_.output.empty() ? Json(nullptr) : Json(o_.output);
      j["ring_size"] = s.ring->size();
      j["module_size"] = s.module->size();
      if (o_.output.empty()) j["structure"] = Json::parse(serialize_structure(file));
      emit(j);
    } else {
      out_ << "wrote " << o_.output << ": ring " << s.ring->size() << " elements, module " << s.module->size()
           << " elements\n";
    }
    return kExitOk;
  }

 private:
  Realized load() const { return realize(read_structure_file(o_.file)); }

  int element(const LeModule& m) const {
    if (o_.element.empty()) throw UsageError("--element is required");
    return resolve_element(m, o_.element, err_);
  }

  std::string target_label(const LeModule& m, int x) const {
    if ((o_.element == "0_M" || o_.element == "e") && !find_name(m, o_.element)) return o_.element;
    return m.name(x);
  }

  std::vector<std::size_t> component_order(const PrimaryDecomposition& d) const {
    std::vector<std::size_t> order(d.components.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return display_before(d.radicals[a], d.radicals[b]); });
    return order;
  }

  int invalid(const char* verb, const Realized& r) {
    const bool ring_failed = !r.ring_violations.empty();
    const Violation& v = ring_failed ? r.ring_violations.front() : r.module_violations.front();
    const char* structure = ring_failed ? "ring" : "module";
    if (o_.json) {
      emit(Json{{"verb", verb}, {"ok", false}, {"violations", Json::array({violation_json(structure, v)})}});
    } else {
      out_ << "first failed axiom: " << structure << " " << v.axiom << " at " << witness_text(v.witness) << ": "
           << v.detail << "\n";
    }
    return kExitViolation;
  }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  static std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s) w += (c & 0xC0) != 0x80;
    return w;
  }
  static std::string pad(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    return w >= width ? s : s + std::string(width - w, ' ');
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

int report_error(const Options& o, const std::string& verb, const char* kind, const std::string& message,
                 const std::string& path, int code, std::ostream& out, std::ostream& err) {
  err << "error: " << message << "\n";
  if (o.json) {
    Json e{{"kind", kind}, {"message", message}};
    e["path"] = path.empty() ? Json(nullptr) : Json(path);
    Json j{{"verb", verb.empty() ? Json(nullptr) : Json(verb)}, {"ok", false}, {"error", e}};
    out << j.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int resolve_element(const LeModule& m, const std::string& token, std::ostream& err) {
  const auto index = parse_index(token);
  if (const auto named = find_name(m, token)) {
    if (index && *index != *named && *index >= 0 && *index < m.size()) {
      err << "warning: \"" << token << "\" names element " << *named << ", not index " << *index << "\n";
    }
    if ((token == "0_M" && *named != m.zero()) || (token == "e" && *named != m.top())) {
      err << "warning: \"" << token << "\" is a display name here, not the alias\n";
    }
    return *named;
  }
  if (token == "0_M") return m.zero();
  if (token == "e") return m.top();
  if (const auto angled = angle_form(token); !angled.empty()) {
    if (const auto named = find_name(m, angled)) return *named;
  }
  if (index && *index >= 0 && *index < m.size()) return *index;
  throw UsageError("no element \"" + token + "\"");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite le-module toolkit: axioms, classification, primary decomposition"};
  app.name("lemod");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable report");
  app.add_option("--max-pool", o.max_pool, "Cap on primary candidates in decomposition search")
      ->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Check ring and le-module axioms");
  validate->add_option("file", o.file, "Structure file")->required();

  auto* classify = app.add_subcommand("classify", "Primary and prime flags of every submodule element");
  classify->add_option("file", o.file, "Structure file")->required();

  auto* decompose = app.add_subcommand("decompose", "Reduced primary decomposition of an element");
  decompose->add_option("file", o.file, "Structure file")->required();
  decompose->add_option("--element", o.element, "Display name, alias (0_M, e), <d> or index")->required();
  decompose->add_flag("--all", o.all, "Every reduced decomposition");

  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("file", o.file, "Structure file")->required();
  verify->add_option("--element", o.element, "Restrict quantified targets to one element");

  auto* scomp = app.add_subcommand("s-component", "n_S for a multiplicatively closed set S");
  scomp->add_option("file", o.file, "Structure file")->required();
  scomp->add_option("--element", o.element, "Target element")->required();
  scomp->add_option("--set", o.set, "Ring element indices of S")->required()->delimiter(',');

  auto* gen = app.add_subcommand("generate", "Write a generated structure file");
  gen->add_option("--kind", o.kind, "submodule-lattice, chain or random")->capture_default_str();
  gen->add_option("--n", o.n, "Modulus of Z/nZ")->capture_default_str();
  gen->add_option("--p", o.p, "Ring element generating the prime (chain)")->capture_default_str();
  gen->add_option("--length", o.length, "Chain length")->capture_default_str();
  gen->add_option("--seed", o.seed, "Seed (random)")->capture_default_str();
  gen->add_option("--max-ring", o.max_ring, "Ring size bound (random)")->capture_default_str();
  gen->add_option("--max-module", o.max_module, "Module size bound (random)")->capture_default_str();
  gen->add_option("-o,--output", o.output, "Output path; standard output when absent");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string verb;
    for (const auto* sub : app.get_subcommands()) verb = sub->get_name();
    return report_error(o, verb, "usage", e.what(), "", kExitUsage, out, err);
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Session session(o, out, err);
  try {
    if (verb == "validate") return session.validate();
    if (verb == "classify") return session.classify();
    if (verb == "decompose") return session.decompose();
    if (verb == "verify") return session.verify();
    if (verb == "s-component") return session.s_component_verb();
    return session.generate_verb();
  } catch (const FormatError& e) {
    return report_error(o, verb, "format", e.what(), e.path(), kExitUsage, out, err);
  } catch (const UsageError& e) {
    return report_error(o, verb, "usage", e.what(), "", kExitUsage, out, err);
  } catch (const CapacityError& e) {
    return report_error(o, verb, "capacity", e.what(), "", kExitCapacity, out, err);
  } catch (const InvariantError& e) {
    return report_error(o, verb, "invariant", e.what(), "", kExitViolation, out, err);
  }
}

}  // namespace lemod
