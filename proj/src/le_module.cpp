#include "lemod/le_module.hpp"

#include <map>
#include <set>
#include <sstream>

#include "lemod/errors.hpp"

namespace lemod {

namespace {

std::string at(const std::string& base, int i) { return base + "[" + std::to_string(i) + "]"; }

struct Law {
  const char* axiom;
  const char* statement;
  const char* variables;  // ring variables first
};

constexpr Law kModuleLaws[] = {
    {"order-reflexive", "x <= x", "x"},
    {"order-antisymmetric", "x <= y and y <= x imply x = y", "xy"},
    {"order-transitive", "x <= y and y <= z imply x <= z", "xyz"},
    {"lattice-join", "x v y exists", "xy"},
    {"lattice-meet", "x ^ y exists", "xy"},
    {"top-greatest", "x <= e", "x"},
    {"add-commutative", "x + y = y + x", "xy"},
    {"add-associative", "(x + y) + z = x + (y + z)", "xyz"},
    {"add-identity", "0 + x = x = x + 0", "x"},
    {"S", "x + (y v z) = (x + y) v (x + z)", "xyz"},
    {"M1", "r(x + y) = rx + ry", "rxy"},
    {"M2", "(r + s)x <= rx + sx", "rsx"},
    {"M3", "(rs)x = r(sx)", "rsx"},
    {"M4-one", "1x = x", "x"},
    {"M4-zero-ring", "0x = 0_M", "x"},
    {"M4-zero-module", "r0_M = 0_M", "r"},
    {"M5", "r(x v y) = rx v ry", "rxy"},
};

std::string law_detail(const char* axiom, const std::vector<int>& w) {
  for (const auto& law : kModuleLaws) {
    if (std::string_view(law.axiom) != axiom) continue;
    std::string out = std::string(law.statement) + " fails for";
    for (std::size_t i = 0; i < w.size() && law.variables[i]; ++i) {
      out += std::string(i ? ", " : " ") + law.variables[i] + "=" + std::to_string(w[i]);
    }
    return out;
  }
  return {};
}

void check_rows(const Table& t, int rows, int cols, int bound, const std::string& path) {
  if (static_cast<int>(t.size()) != rows) {
    throw FormatError("table must have " + std::to_string(rows) + " rows", path);
  }
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(t[i].size()) != cols) {
      throw FormatError("row must have " + std::to_string(cols) + " entries", at(path, i));
    }
    for (int j = 0; j < cols; ++j) {
      if (t[i][j] < 0 || t[i][j] >= bound) throw FormatError("entry out of range", at(at(path, i), j));
    }
  }
}

void check_shape(const RawModule& m, int ring_size, int max_size) {
  if (m.size < 1) throw FormatError("module size must be positive", "$.module.size");
  if (m.size > max_size || m.size > kMaxElements) {
    throw CapacityError("module size " + std::to_string(m.size) + " exceeds the module cap " +
                        std::to_string(std::min(max_size, kMaxElements)));
  }
  if (!m.names.empty()) {
    if (static_cast<int>(m.names.size()) != m.size) {
      throw FormatError("names must list one name per element", "$.module.names");
    }
    std::set<std::string> seen;
    for (int i = 0; i < m.size; ++i) {
      if (!seen.insert(m.names[i]).second) throw FormatError("duplicate name", at("$.module.names", i));
    }
  }
  if (static_cast<int>(m.leq.size()) != m.size) {
    throw FormatError("table must have " + std::to_string(m.size) + " rows", "$.module.leq");
  }
  for (int i = 0; i < m.size; ++i) {
    if (static_cast<int>(m.leq[i].size()) != m.size) {
      throw FormatError("row must have " + std::to_string(m.size) + " entries", at("$.module.leq", i));
    }
  }
  check_rows(m.add, m.size, m.size, m.size, "$.module.add");
  if (m.zero < 0 || m.zero >= m.size) throw FormatError("index out of range", "$.module.zero");
  if (m.top < 0 || m.top >= m.size) throw FormatError("index out of range", "$.module.top");
  check_rows(m.action, ring_size, m.size, m.size, "$.module.action");
}

// Least upper bound by direct scan of the order; -1 when absent.
int scan_lub(const RawModule& m, int a, int b) {
  int best = -1;
  for (int u = 0; u < m.size; ++u) {
    if (!m.leq[a][u] || !m.leq[b][u]) continue;
    bool least = true;
    for (int v = 0; v < m.size && least; ++v) {
      if (m.leq[a][v] && m.leq[b][v]) least = m.leq[u][v];
    }
    if (least) best = u;
  }
  return best;
}

int scan_glb(const RawModule& m, int a, int b) {
  int best = -1;
  for (int u = 0; u < m.size; ++u) {
    if (!m.leq[u][a] || !m.leq[u][b]) continue;
    bool greatest = true;
    for (int v = 0; v < m.size && greatest; ++v) {
      if (m.leq[v][a] && m.leq[v][b]) greatest = m.leq[v][u];
    }
    if (greatest) best = u;
  }
  return best;
}

template <class F>
void for_each_tuple(int arity, std::span<const int> bounds, F&& f) {
  std::vector<int> w(arity, 0);
  while (true) {
    if (!f(w)) return;
    int i = arity - 1;
    while (i >= 0 && ++w[i] == bounds[i]) w[i--] = 0;
    if (i < 0) return;
  }
}

}  // namespace

LeModule::LeModule(RawModule raw, RingPtr ring)
    : raw_(std::move(raw)), ring_(std::move(ring)), size_(raw_.size), zero_(raw_.zero), top_(raw_.top) {
  const int m = size_;
  const int k = ring_->size();
  below_.assign(m, 0);
  above_.assign(m, 0);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (raw_.leq[x][y]) {
        below_[y] |= bit(x);
        above_[x] |= bit(y);
      }
    }
  }
  add_.resize(m * m);
  join_.resize(m * m);
  meet_.resize(m * m);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      add_[x * m + y] = raw_.add[x][y];
      join_[x * m + y] = scan_lub(raw_, x, y);
      meet_[x * m + y] = scan_glb(raw_, x, y);
    }
  }
  action_.resize(k * m);
  for (int r = 0; r < k; ++r) {
    for (int x = 0; x < m; ++x) action_[r * m + x] = raw_.action[r][x];
  }
  names_ = raw_.names;
  if (names_.empty()) {
    for (int x = 0; x < m; ++x) names_.push_back(std::to_string(x));
  }
}

int LeModule::join(Mask xs) const {
  if (xs == 0) throw UsageError("join of the empty set is not supported");
  int acc = -1;
  for_each_bit(xs, [&](int x) { acc = acc < 0 ? x : join(acc, x); });
  return acc;
}

int LeModule::meet(Mask xs) const {
  if (xs == 0) throw UsageError("meet of the empty set is not supported");
  int acc = -1;
  for_each_bit(xs, [&](int x) { acc = acc < 0 ? x : meet(acc, x); });
  return acc;
}

int LeModule::join(std::span<const int> xs) const {
  Mask m = 0;
  for (int x : xs) m |= bit(x);
  return join(m);
}

int LeModule::meet(std::span<const int> xs) const {
  Mask m = 0;
  for (int x : xs) m |= bit(x);
  return meet(m);
}

ModuleValidation validate_le_module(const RawModule& c, RingPtr ring, int max_size) {
  if (!ring) throw UsageError("module validation needs a validated ring");
  check_shape(c, ring->size(), max_size);
  const int m = c.size;
  const int k = ring->size();
  const auto& R = *ring;
  ModuleValidation out;

  auto scan = [&](const char* axiom, std::vector<int> bounds, auto&& holds) {
    for_each_tuple(static_cast<int>(bounds.size()), bounds, [&](const std::vector<int>& w) {
      if (holds(w)) return true;
      out.violations.push_back({axiom, w, law_detail(axiom, w)});
      return false;
    });
  };
  const auto& L = c.leq;
  const auto& A = c.add;
  const auto& act = c.action;

  const std::size_t before_order = out.violations.size();
  scan("order-reflexive", {m}, [&](const auto& w) { return L[w[0]][w[0]]; });
  scan("order-antisymmetric", {m, m},
       [&](const auto& w) { return w[0] == w[1] || !(L[w[0]][w[1]] && L[w[1]][w[0]]); });
  scan("order-transitive", {m, m, m},
       [&](const auto& w) { return !(L[w[0]][w[1]] && L[w[1]][w[2]]) || L[w[0]][w[2]]; });
  const bool order_ok = out.violations.size() == before_order;

  std::vector<int> lub(m * m, -1);
  bool lattice_ok = false;
  if (order_ok) {
    const std::size_t before = out.violations.size();
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) lub[x * m + y] = scan_lub(c, x, y);
    }
    scan("lattice-join", {m, m}, [&](const auto& w) { return lub[w[0] * m + w[1]] >= 0; });
    scan("lattice-meet", {m, m}, [&](const auto& w) { return scan_glb(c, w[0], w[1]) >= 0; });
    scan("top-greatest", {m}, [&](const auto& w) { return L[w[0]][c.top]; });
    lattice_ok = out.violations.size() == before;
  }
  auto J = [&](int x, int y) { return lub[x * m + y]; };

  scan("add-commutative", {m, m}, [&](const auto& w) { return A[w[0]][w[1]] == A[w[1]][w[0]]; });
  scan("add-associative", {m, m, m},
       [&](const auto& w) { return A[A[w[0]][w[1]]][w[2]] == A[w[0]][A[w[1]][w[2]]]; });
  scan("add-identity", {m},
       [&](const auto& w) { return A[c.zero][w[0]] == w[0] && A[w[0]][c.zero] == w[0]; });
  if (lattice_ok) {
    scan("S", {m, m, m},
         [&](const auto& w) { return A[w[0]][J(w[1], w[2])] == J(A[w[0]][w[1]], A[w[0]][w[2]]); });
  }
  scan("M1", {k, m, m},
       [&](const auto& w) { return act[w[0]][A[w[1]][w[2]]] == A[act[w[0]][w[1]]][act[w[0]][w[2]]]; });
  if (order_ok) {
    scan("M2", {k, k, m}, [&](const auto& w) {
      return L[act[R.add(w[0], w[1])][w[2]]][A[act[w[0]][w[2]]][act[w[1]][w[2]]]];
    });
  }
  scan("M3", {k, k, m},
       [&](const auto& w) { return act[R.mul(w[0], w[1])][w[2]] == act[w[0]][act[w[1]][w[2]]]; });
  scan("M4-one", {m}, [&](const auto& w) { return act[R.one()][w[0]] == w[0]; });
  scan("M4-zero-ring", {m}, [&](const auto& w) { return act[R.zero()][w[0]] == c.zero; });
  scan("M4-zero-module", {k}, [&](const auto& w) { return act[w[0]][c.zero] == c.zero; });
  if (lattice_ok) {
    scan("M5", {k, m, m},
         [&](const auto& w) { return act[w[0]][J(w[1], w[2])] == J(act[w[0]][w[1]], act[w[0]][w[2]]); });
  }

  if (out.violations.empty()) out.module = ModulePtr(new LeModule(c, std::move(ring)));
  return out;
}

ModulePtr make_le_module(const RawModule& candidate, RingPtr ring, int max_size) {
  auto v = validate_le_module(candidate, std::move(ring), max_size);
  if (!v.ok()) {
    std::ostringstream msg;
    msg << "le-module axioms violated:";
    for (const auto& x : v.violations) msg << ' ' << x.axiom;
    throw FormatError(msg.str(), "$.module");
  }
  return v.module;
}

bool recheck_module_violation(const RawModule& c, const FiniteRing& R, const Violation& v) {
  check_shape(c, R.size(), kMaxElements);
  // Variable kinds per axiom: 'm' module element, 'r' ring element.
  static const std::map<std::string, std::string> signature = {
      {"order-reflexive", "m"}, {"order-antisymmetric", "mm"}, {"order-transitive", "mmm"},
      {"lattice-join", "mm"},   {"lattice-meet", "mm"},        {"top-greatest", "m"},
      {"add-commutative", "mm"}, {"add-associative", "mmm"},   {"add-identity", "m"},
      {"S", "mmm"},             {"M1", "rmm"},                 {"M2", "rrm"},
      {"M3", "rrm"},            {"M4-one", "m"},               {"M4-zero-ring", "m"},
      {"M4-zero-module", "r"},  {"M5", "rmm"}};
  const auto it = signature.find(v.axiom);
  if (it == signature.end()) throw UsageError("unknown module axiom: " + v.axiom);
  const auto& w = v.witness;
  if (w.size() != it->second.size()) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int bound = it->second[i] == 'r' ? R.size() : c.size;
    if (w[i] < 0 || w[i] >= bound) return false;
  }
  const auto& L = c.leq;
  const auto& A = c.add;
  const auto& act = c.action;
  const std::string& a = v.axiom;
  if (a == "order-reflexive") return !L[w[0]][w[0]];
  if (a == "order-antisymmetric") return w[0] != w[1] && L[w[0]][w[1]] && L[w[1]][w[0]];
  if (a == "order-transitive") return L[w[0]][w[1]] && L[w[1]][w[2]] && !L[w[0]][w[2]];
  if (a == "lattice-join") return scan_lub(c, w[0], w[1]) < 0;
  if (a == "lattice-meet") return scan_glb(c, w[0], w[1]) < 0;
  if (a == "top-greatest") return !L[w[0]][c.top];
  if (a == "add-commutative") return A[w[0]][w[1]] != A[w[1]][w[0]];
  if (a == "add-associative") return A[A[w[0]][w[1]]][w[2]] != A[w[0]][A[w[1]][w[2]]];
  if (a == "add-identity") return A[c.zero][w[0]] != w[0] || A[w[0]][c.zero] != w[0];
  if (a == "M1") return act[w[0]][A[w[1]][w[2]]] != A[act[w[0]][w[1]]][act[w[0]][w[2]]];
  if (a == "M2") return !L[act[R.add(w[0], w[1])][w[2]]][A[act[w[0]][w[2]]][act[w[1]][w[2]]]];
  if (a == "M3") return act[R.mul(w[0], w[1])][w[2]] != act[w[0]][act[w[1]][w[2]]];
  if (a == "M4-one") return act[R.one()][w[0]] != w[0];
  if (a == "M4-zero-ring") return act[R.zero()][w[0]] != c.zero;
  if (a == "M4-zero-module") return act[w[0]][c.zero] != c.zero;
  // S and M5 compare joins; a missing join makes the instance meaningless.
  auto J = [&](int x, int y) { return scan_lub(c, x, y); };
  if (a == "S") {
    const int inner = J(w[1], w[2]);
    const int rhs = J(A[w[0]][w[1]], A[w[0]][w[2]]);
    return inner >= 0 && rhs >= 0 && A[w[0]][inner] != rhs;
  }
  const int inner = J(w[1], w[2]);
  const int rhs = J(act[w[0]][w[1]], act[w[0]][w[2]]);
  return inner >= 0 && rhs >= 0 && act[w[0]][inner] != rhs;
}

std::optional<SubmoduleWitness> submodule_violation(const LeModule& m, int x) {
  if (!m.leq(m.add(x, x), x)) return SubmoduleWitness{"n+n", -1};
  for (int r = 0; r < m.ring().size(); ++r) {
    if (!m.leq(m.act(r, x), x)) return SubmoduleWitness{"r.n", r};
  }
  return std::nullopt;
}

bool is_submodule_element(const LeModule& m, int x) { return !submodule_violation(m, x).has_value(); }

std::optional<SubmoduleElement> as_submodule_element(const LeModule& m, int x) {
  if (x < 0 || x >= m.size()) throw UsageError("element index out of range: " + std::to_string(x));
  if (!is_submodule_element(m, x)) return std::nullopt;
  return SubmoduleElement(m, x);
}

SubmoduleElement submodule_element(const LeModule& m, int x) {
  auto n = as_submodule_element(m, x);
  if (!n) throw UsageError("element " + m.name(x) + " is not a submodule element");
  return *n;
}

std::vector<SubmoduleElement> submodule_elements(const LeModule& m) {
  std::vector<SubmoduleElement> out;
  for (int x = 0; x < m.size(); ++x) {
    if (auto n = as_submodule_element(m, x)) out.push_back(*n);
  }
  return out;
}

namespace {

SubmoduleElement guaranteed_submodule(const LeModule& m, int x, const char* what) {
  auto n = as_submodule_element(m, x);
  if (!n) throw InvariantError(std::string(what) + " produced a non-submodule element " + m.name(x));
  return *n;
}

void require_ring(const LeModule& m, const Ideal& a) {
  if (&a.ring() != &m.ring()) throw UsageError("ideal belongs to a different ring than the module");
}

}  // namespace

SubmoduleElement ideal_action(const LeModule& m, const Ideal& a, int n) {
  require_ring(m, a);
  if (n < 0 || n >= m.size()) throw UsageError("element index out of range");
  Mask gens = 0;
  for_each_bit(a.members(), [&](int r) { gens |= bit(m.act(r, n)); });
  Mask closed = gens;
  Mask frontier = gens;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](int x) { for_each_bit(gens, [&](int g) { next |= bit(m.add(x, g)); }); });
    frontier = next & ~closed;
    closed |= next;
  }
  return guaranteed_submodule(m, m.join(closed), "ideal action");
}

SubmoduleElement residual_by_element(const SubmoduleElement& n, int r) {
  const auto& m = n.module();
  if (r < 0 || r >= m.ring().size()) throw UsageError("ring element out of range");
  Mask xs = 0;
  for (int x = 0; x < m.size(); ++x) {
    if (m.leq(m.act(r, x), n.index())) xs |= bit(x);
  }
  return guaranteed_submodule(m, m.join(xs), "(n:r)");
}

SubmoduleElement residual_by_ideal(const SubmoduleElement& n, const Ideal& a) {
  const auto& m = n.module();
  require_ring(m, a);
  Mask xs = 0;
  for (int x = 0; x < m.size(); ++x) {
    bool ok = true;
    for_each_bit(a.members(), [&](int r) { ok = ok && m.leq(m.act(r, x), n.index()); });
    if (ok) xs |= bit(x);
  }
  return guaranteed_submodule(m, m.join(xs), "(n:A)");
}

Ideal transporter(const SubmoduleElement& l, int n) {
  const auto& m = l.module();
  if (n < 0 || n >= m.size()) throw UsageError("element index out of range");
  Mask rs = 0;
  for (int r = 0; r < m.ring().size(); ++r) {
    if (m.leq(m.act(r, n), l.index())) rs |= bit(r);
  }
  try {
    return ideal_from_members(m.ring(), rs);
  } catch (const UsageError&) {
    throw InvariantError("transporter (" + m.name(l.index()) + ":" + m.name(n) + ") is not an ideal");
  }
}

Ideal radical_of_element(const SubmoduleElement& n) {
  return ideal_radical(transporter(n, n.module().top()));
}

}  // namespace lemod
