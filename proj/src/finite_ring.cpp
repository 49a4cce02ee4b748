#include "lemod/finite_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lemod/errors.hpp"

namespace lemod {

namespace {

void check_table(const Table& t, int size, const char* name) {
  if (static_cast<int>(t.size()) != size) {
    throw FormatError("table must have " + std::to_string(size) + " rows", std::string("$.ring.") + name);
  }
  for (int i = 0; i < size; ++i) {
    const auto path = std::string("$.ring.") + name + "[" + std::to_string(i) + "]";
    if (static_cast<int>(t[i].size()) != size) {
      throw FormatError("row must have " + std::to_string(size) + " entries", path);
    }
    for (int j = 0; j < size; ++j) {
      if (t[i][j] < 0 || t[i][j] >= size) {
        throw FormatError("entry out of range", path + "[" + std::to_string(j) + "]");
      }
    }
  }
}

void check_shape(const RawRing& r, int max_size) {
  if (r.size < 1) throw FormatError("ring size must be positive", "$.ring.size");
  if (r.size > max_size) {
    throw CapacityError("ring size " + std::to_string(r.size) + " exceeds the ring cap " +
                        std::to_string(max_size));
  }
  if (r.size > kMaxElements) {
    throw CapacityError("ring size " + std::to_string(r.size) + " exceeds the hard limit 64");
  }
  check_table(r.add, r.size, "add");
  check_table(r.mul, r.size, "mul");
  if (r.zero < 0 || r.zero >= r.size) throw FormatError("index out of range", "$.ring.zero");
  if (r.one < 0 || r.one >= r.size) throw FormatError("index out of range", "$.ring.one");
}

// Evaluates one axiom instance on raw tables; true when the instance holds.
bool ring_instance_holds(const RawRing& r, const std::string& axiom, const std::vector<int>& w) {
  const auto& A = r.add;
  const auto& M = r.mul;
  if (axiom == "add-commutative") return A[w[0]][w[1]] == A[w[1]][w[0]];
  if (axiom == "add-associative") return A[A[w[0]][w[1]]][w[2]] == A[w[0]][A[w[1]][w[2]]];
  if (axiom == "add-identity") return A[r.zero][w[0]] == w[0] && A[w[0]][r.zero] == w[0];
  if (axiom == "add-inverse") {
    for (int b = 0; b < r.size; ++b) {
      if (A[w[0]][b] == r.zero) return true;
    }
    return false;
  }
  if (axiom == "mul-commutative") return M[w[0]][w[1]] == M[w[1]][w[0]];
  if (axiom == "mul-associative") return M[M[w[0]][w[1]]][w[2]] == M[w[0]][M[w[1]][w[2]]];
  if (axiom == "mul-identity") return M[r.one][w[0]] == w[0] && M[w[0]][r.one] == w[0];
  if (axiom == "distributive") return M[w[0]][A[w[1]][w[2]]] == A[M[w[0]][w[1]]][M[w[0]][w[2]]];
  throw UsageError("unknown ring axiom: " + axiom);
}

std::string ring_law_detail(const std::string& axiom, const std::vector<int>& w) {
  static const std::pair<const char*, const char*> laws[] = {
      {"add-commutative", "a + b = b + a"},
      {"add-associative", "(a + b) + c = a + (b + c)"},
      {"add-identity", "0 + a = a = a + 0"},
      {"add-inverse", "a + b = 0 for some b"},
      {"mul-commutative", "ab = ba"},
      {"mul-associative", "(ab)c = a(bc)"},
      {"mul-identity", "1a = a = a1"},
      {"distributive", "a(b + c) = ab + ac"},
  };
  for (const auto& [name, statement] : laws) {
    if (axiom != name) continue;
    std::string out = std::string(statement) + " fails for";
    for (std::size_t i = 0; i < w.size(); ++i) {
      out += std::string(i ? ", " : " ") + static_cast<char>('a' + i) + "=" + std::to_string(w[i]);
    }
    return out;
  }
  return {};
}

}  // namespace

FiniteRing::FiniteRing(RawRing raw)
    : raw_(std::move(raw)), size_(raw_.size), zero_(raw_.zero), one_(raw_.one) {
  add_.resize(size_ * size_);
  mul_.resize(size_ * size_);
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      add_[a * size_ + b] = raw_.add[a][b];
      mul_[a * size_ + b] = raw_.mul[a][b];
    }
  }
  neg_.assign(size_, zero_);
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      if (add(a, b) == zero_) {
        neg_[a] = b;
        break;
      }
    }
  }
  powers_.assign(size_, 0);
  for (int a = 0; a < size_; ++a) {
    Mask seen = 0;
    for (int p = a; !has(seen, p); p = mul(p, a)) seen |= bit(p);
    powers_[a] = seen;
  }
}

int FiniteRing::pow(int a, int e) const {
  int p = a;
  for (int i = 1; i < e; ++i) p = mul(p, a);
  return p;
}

void FiniteRing::build_ideals() {
  std::set<Mask> found;
  std::vector<Mask> principal;
  for (int a = 0; a < size_; ++a) {
    Mask m = 0;
    for (int r = 0; r < size_; ++r) m |= bit(mul(r, a));
    if (found.insert(m).second) principal.push_back(m);
  }
  auto sum = [&](Mask x, Mask y) {
    Mask out = 0;
    for_each_bit(x, [&](int a) { for_each_bit(y, [&](int b) { out |= bit(add(a, b)); }); });
    return out;
  };
  for (std::size_t i = 0; i < principal.size(); ++i) {
    for (std::size_t j = i + 1; j < principal.size(); ++j) found.insert(sum(principal[i], principal[j]));
  }
  // Every ideal of a finite ring is a finite sum of principal ideals.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Mask> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (found.insert(sum(current[i], current[j])).second) grew = true;
      }
    }
  }
  ideals_ = std::make_unique<std::vector<Ideal>>();
  for (Mask m : found) ideals_->push_back(Ideal(*this, m));
}

RingValidation validate_ring(const RawRing& r, int max_size) {
  check_shape(r, max_size);
  RingValidation out;
  const int k = r.size;
  auto scan = [&](const std::string& axiom, int arity) {
    std::vector<int> w(arity, 0);
    const long long total = arity == 1 ? k : arity == 2 ? k * k : k * k * k;
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      for (int i = arity - 1; i >= 0; --i) {
        w[i] = static_cast<int>(rest % k);
        rest /= k;
      }
      if (!ring_instance_holds(r, axiom, w)) {
        out.violations.push_back({axiom, w, ring_law_detail(axiom, w)});
        return;
      }
    }
  };
  scan("add-commutative", 2);
  scan("add-associative", 3);
  scan("add-identity", 1);
  scan("add-inverse", 1);
  scan("mul-commutative", 2);
  scan("mul-associative", 3);
  scan("mul-identity", 1);
  scan("distributive", 3);
  if (out.violations.empty()) {
    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing(r));
    ring->build_ideals();
    out.ring = std::move(ring);
  }
  return out;
}

RingPtr make_ring(const RawRing& candidate, int max_size) {
  auto v = validate_ring(candidate, max_size);
  if (!v.ok()) {
    std::ostringstream msg;
    msg << "ring axioms violated:";
    for (const auto& x : v.violations) msg << ' ' << x.axiom;
    throw FormatError(msg.str(), "$.ring");
  }
  return v.ring;
}

bool recheck_ring_violation(const RawRing& candidate, const Violation& v) {
  check_shape(candidate, kMaxElements);
  for (int x : v.witness) {
    if (x < 0 || x >= candidate.size) return false;
  }
  return !ring_instance_holds(candidate, v.axiom, v.witness);
}

RawRing zn_tables(int n) {
  if (n < 1) throw UsageError("Z/nZ needs n >= 1");
  RawRing r;
  r.size = n;
  r.add.assign(n, std::vector<int>(n));
  r.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      r.add[a][b] = (a + b) % n;
      r.mul[a][b] = (a * b) % n;
    }
  }
  r.zero = 0;
  r.one = 1 % n;
  return r;
}

Ideal ideal_from_members(const FiniteRing& ring, Mask members) {
  if (!subset_of(members, ring.all()) || !has(members, ring.zero())) {
    throw UsageError("not an ideal: must contain zero and only ring elements");
  }
  bool ok = true;
  for_each_bit(members, [&](int a) {
    for_each_bit(members, [&](int b) { ok = ok && has(members, ring.sub(a, b)); });
    for (int r = 0; r < ring.size() && ok; ++r) ok = has(members, ring.mul(r, a));
  });
  if (!ok) throw UsageError("not an ideal: not closed under subtraction or ring multiplication");
  return Ideal(ring, members);
}

Ideal generate_ideal(const FiniteRing& ring, Mask generators) {
  Mask multiples = 0;
  for_each_bit(generators, [&](int g) {
    for (int r = 0; r < ring.size(); ++r) multiples |= bit(ring.mul(r, g));
  });
  // Additive closure; in a finite group this is the generated subgroup.
  Mask closed = bit(ring.zero());
  Mask frontier = closed;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](int x) {
      for_each_bit(multiples, [&](int g) { next |= bit(ring.add(x, g)); });
    });
    frontier = next & ~closed;
    closed |= next;
  }
  return Ideal(ring, closed);
}

Ideal principal_ideal(const FiniteRing& ring, int a) { return generate_ideal(ring, bit(a)); }
Ideal zero_ideal(const FiniteRing& ring) { return generate_ideal(ring, 0); }
Ideal unit_ideal(const FiniteRing& ring) { return generate_ideal(ring, bit(ring.one())); }

const std::vector<Ideal>& enumerate_ideals(const FiniteRing& ring) { return ring.ideals(); }

namespace {
void require_same_ring(const Ideal& a, const Ideal& b) {
  if (&a.ring() != &b.ring()) throw UsageError("ideals belong to different rings");
}
}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const auto& R = a.ring();
  Mask out = 0;
  for_each_bit(a.members(), [&](int x) { for_each_bit(b.members(), [&](int y) { out |= bit(R.add(x, y)); }); });
  return generate_ideal(R, out);
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const auto& R = a.ring();
  Mask products = 0;
  for_each_bit(a.members(), [&](int x) { for_each_bit(b.members(), [&](int y) { products |= bit(R.mul(x, y)); }); });
  return generate_ideal(R, products);
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return generate_ideal(a.ring(), a.members() & b.members());
}

Ideal ideal_radical(const Ideal& i) {
  const auto& R = i.ring();
  Mask out = 0;
  for (int a = 0; a < R.size(); ++a) {
    if ((R.powers(a) & i.members()) != 0) out |= bit(a);
  }
  return generate_ideal(R, out);
}

bool is_prime_ideal(const Ideal& p) {
  if (!p.is_proper()) return false;
  const auto& R = p.ring();
  for (int a = 0; a < R.size(); ++a) {
    if (p.contains(a)) continue;
    for (int b = 0; b < R.size(); ++b) {
      if (!p.contains(b) && p.contains(R.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_maximal_ideal(const Ideal& i) {
  if (!i.is_proper()) return false;
  for (const auto& j : i.ring().ideals()) {
    if (j != i && j.is_proper() && i.is_subset_of(j)) return false;
  }
  return true;
}

bool is_primary_ideal(const Ideal& i) {
  if (!i.is_proper()) return false;
  const auto& R = i.ring();
  const Mask rad = ideal_radical(i).members();
  for (int a = 0; a < R.size(); ++a) {
    if (has(rad, a)) continue;
    for (int b = 0; b < R.size(); ++b) {
      if (!i.contains(b) && i.contains(R.mul(a, b))) return false;
    }
  }
  return true;
}

std::vector<Ideal> prime_ideals(const FiniteRing& ring) {
  std::vector<Ideal> out;
  for (const auto& p : ring.ideals()) {
    if (is_prime_ideal(p)) out.push_back(p);
  }
  return out;
}

std::vector<Ideal> minimal_primes_over(const Ideal& i) {
  if (!i.is_proper()) throw UsageError("no prime ideal contains the whole ring");
  std::vector<Ideal> above;
  for (const auto& p : prime_ideals(i.ring())) {
    if (i.is_subset_of(p)) above.push_back(p);
  }
  std::vector<Ideal> out;
  for (const auto& p : above) {
    const bool minimal = std::none_of(above.begin(), above.end(), [&](const Ideal& q) {
      return q != p && q.is_subset_of(p);
    });
    if (minimal) out.push_back(p);
  }
  return out;
}

MultClosedSet mult_closed_set(const FiniteRing& ring, Mask members) {
  if (!subset_of(members, ring.all()) || !has(members, ring.one())) {
    throw UsageError("multiplicatively closed set must contain 1");
  }
  bool ok = true;
  for_each_bit(members, [&](int s) {
    for_each_bit(members, [&](int t) { ok = ok && has(members, ring.mul(s, t)); });
  });
  if (!ok) throw UsageError("set is not closed under multiplication");
  return MultClosedSet(ring, members);
}

MultClosedSet complement_of_prime_union(const FiniteRing& ring, std::span<const Ideal> primes) {
  Mask uni = 0;
  for (const auto& p : primes) {
    if (&p.ring() != &ring) throw UsageError("ideal belongs to a different ring");
    if (!is_prime_ideal(p)) throw UsageError("complement of a union is only closed for prime ideals");
    uni |= p.members();
  }
  return mult_closed_set(ring, ring.all() & ~uni);
}

std::vector<int> ideal_generators(const Ideal& i) {
  const auto& R = i.ring();
  const auto elems = i.elements();
  for (int g : elems) {
    if (principal_ideal(R, g) == i) return {g};
  }
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = a + 1; b < elems.size(); ++b) {
      if (generate_ideal(R, bit(elems[a]) | bit(elems[b])) == i) return {elems[a], elems[b]};
    }
  }
  return elems;
}

std::string ideal_label(const Ideal& i) {
  const auto gens = ideal_generators(i);
  const bool short_form = gens.size() <= 2 && (gens.size() == 1 || gens != i.elements());
  std::string out = short_form ? "(" : "{";
  for (std::size_t a = 0; a < gens.size(); ++a) out += (a ? "," : "") + std::to_string(gens[a]);
  return out + (short_form ? ")" : "}");
}

bool display_before(const Ideal& a, const Ideal& b) {
  const auto ga = ideal_generators(a), gb = ideal_generators(b);
  return ga != gb ? ga < gb : a < b;
}

}  // namespace lemod
