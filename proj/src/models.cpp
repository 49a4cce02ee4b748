#include "lemod/models.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "lemod/errors.hpp"

namespace lemod {

namespace {

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Finite R-module (an abelian group with a ring action), the base of the
// subset constructions below.
struct BaseModule {
  int size = 0;
  std::vector<int> add;     // size x size
  std::vector<int> action;  // ring size x size

  int plus(int a, int b) const { return add[a * size + b]; }
};

BaseModule quotient_module(const FiniteRing& R, const Ideal& I) {
  const int k = R.size();
  std::vector<int> rep(k);
  for (int a = 0; a < k; ++a) {
    int best = a;
    for_each_bit(I.members(), [&](int i) { best = std::min(best, R.add(a, i)); });
    rep[a] = best;
  }
  std::vector<int> reps(rep);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<int> id(k);
  for (int a = 0; a < k; ++a) id[a] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), rep[a]) - reps.begin());

  BaseModule n;
  n.size = static_cast<int>(reps.size());
  n.add.resize(n.size * n.size);
  n.action.resize(k * n.size);
  for (int i = 0; i < n.size; ++i) {
    for (int j = 0; j < n.size; ++j) n.add[i * n.size + j] = id[R.add(reps[i], reps[j])];
    for (int r = 0; r < k; ++r) n.action[r * n.size + i] = id[R.mul(r, reps[i])];
  }
  return n;
}

BaseModule direct_sum(const BaseModule& a, const BaseModule& b, int ring_size) {
  BaseModule n;
  n.size = a.size * b.size;
  n.add.resize(n.size * n.size);
  n.action.resize(ring_size * n.size);
  for (int x = 0; x < n.size; ++x) {
    const int xa = x / b.size, xb = x % b.size;
    for (int y = 0; y < n.size; ++y) {
      const int ya = y / b.size, yb = y % b.size;
      n.add[x * n.size + y] = a.plus(xa, ya) * b.size + b.plus(xb, yb);
    }
    for (int r = 0; r < ring_size; ++r) {
      n.action[r * n.size + x] = a.action[r * a.size + xa] * b.size + b.action[r * b.size + xb];
    }
  }
  return n;
}

Mask set_sum(const BaseModule& n, Mask x, Mask y) {
  Mask out = 0;
  for_each_bit(x, [&](int a) { for_each_bit(y, [&](int b) { out |= bit(n.plus(a, b)); }); });
  return out;
}

Mask set_act(const BaseModule& n, int r, Mask x) {
  Mask out = 0;
  for_each_bit(x, [&](int a) { out |= bit(n.action[r * n.size + a]); });
  return out;
}

std::vector<Mask> submodules(const BaseModule& n, int ring_size) {
  std::vector<Mask> found;
  auto insert = [&](Mask m) {
    if (std::find(found.begin(), found.end(), m) == found.end()) found.push_back(m);
  };
  for (int x = 0; x < n.size; ++x) {
    Mask cyclic = 0;
    for (int r = 0; r < ring_size; ++r) cyclic |= bit(n.action[r * n.size + x]);
    insert(cyclic);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) insert(set_sum(n, found[i], found[j]));
  }
  return found;
}

// Closure of `generators` plus {0} and N under union, elementwise sum, the
// action and optionally intersection. Empty result when it exceeds `limit`.
std::vector<Mask> closure(const BaseModule& n, int ring_size, std::span<const Mask> generators, bool with_meet,
                          int limit) {
  std::vector<Mask> elems;
  bool overflow = false;
  auto push = [&](Mask m) {
    if (overflow || std::find(elems.begin(), elems.end(), m) != elems.end()) return;
    elems.push_back(m);
    overflow = static_cast<int>(elems.size()) > limit;
  };
  push(bit(0));
  push(full_mask(n.size));
  for (Mask g : generators) push(g);
  for (std::size_t i = 0; i < elems.size() && !overflow; ++i) {
    const Mask x = elems[i];
    for (int r = 0; r < ring_size; ++r) push(set_act(n, r, x));
    for (std::size_t j = 0; j <= i && !overflow; ++j) {
      const Mask y = elems[j];
      push(x | y);
      push(set_sum(n, x, y));
      if (with_meet) push(x & y);
    }
  }
  if (overflow) return {};
  return elems;
}

std::string set_name(Mask m) {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  });
  return out + "}";
}

RawModule subset_module(const BaseModule& n, int ring_size, std::vector<Mask> elems) {
  std::sort(elems.begin(), elems.end(), [](Mask a, Mask b) {
    return count(a) != count(b) ? count(a) < count(b) : a < b;
  });
  const int m = static_cast<int>(elems.size());
  std::unordered_map<Mask, int> index;
  for (int i = 0; i < m; ++i) index[elems[i]] = i;
  RawModule raw;
  raw.size = m;
  raw.leq.assign(m, std::vector<bool>(m));
  raw.add.assign(m, std::vector<int>(m));
  raw.action.assign(ring_size, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    raw.names.push_back(set_name(elems[i]));
    for (int j = 0; j < m; ++j) {
      raw.leq[i][j] = subset_of(elems[i], elems[j]);
      raw.add[i][j] = index.at(set_sum(n, elems[i], elems[j]));
    }
    for (int r = 0; r < ring_size; ++r) raw.action[r][i] = index.at(set_act(n, r, elems[i]));
  }
  raw.zero = index.at(bit(0));
  raw.top = index.at(full_mask(n.size));
  return raw;
}

RawModule trivial_module(int ring_size) {
  RawModule raw;
  raw.size = 1;
  raw.leq = {{true}};
  raw.add = {{0}};
  raw.action.assign(ring_size, std::vector<int>{0});
  return raw;
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  // Uniform enough for sampling; plain modulo keeps streams identical across
  // standard library implementations.
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

RawRing sample_ring(Draw& draw, int max_ring) {
  if (max_ring < 2) return zn_tables(1);
  std::vector<int> kinds = {0};
  if (max_ring >= 4) kinds.push_back(1);
  if (max_ring >= 4) kinds.push_back(2);
  switch (kinds[draw.below(static_cast<int>(kinds.size()))]) {
    case 1: {
      std::vector<std::pair<int, int>> pairs;
      for (int a = 2; a * 2 <= max_ring; ++a) {
        for (int b = a; a * b <= max_ring; ++b) pairs.emplace_back(a, b);
      }
      const auto [a, b] = pairs[draw.below(static_cast<int>(pairs.size()))];
      return product_ring_tables(zn_tables(a), zn_tables(b));
    }
    case 2: {
      std::vector<std::pair<int, int>> shapes;  // (modulus, degree)
      for (int m = 2; m * m <= max_ring; ++m) {
        int size = m * m;
        for (int d = 2; size <= max_ring; ++d, size *= m) shapes.emplace_back(m, d);
      }
      const auto [m, d] = shapes[draw.below(static_cast<int>(shapes.size()))];
      std::vector<int> coeffs(d);
      for (int& c : coeffs) c = draw.below(m);
      return polynomial_quotient_tables(m, coeffs);
    }
    default:
      return zn_tables(2 + draw.below(max_ring - 1));
  }
}

}  // namespace

RawModule submodule_lattice_tables(int n) {
  if (n < 2) throw UsageError("submodule lattice needs n >= 2");
  const auto ds = divisors(n);
  const int m = static_cast<int>(ds.size());
  auto index_of = [&](int d) { return static_cast<int>(std::find(ds.begin(), ds.end(), d) - ds.begin()); };
  RawModule raw;
  raw.size = m;
  raw.leq.assign(m, std::vector<bool>(m));
  raw.add.assign(m, std::vector<int>(m));
  raw.action.assign(n, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    raw.names.push_back("⟨" + std::to_string(ds[i] == n ? 0 : ds[i]) + "⟩");
    for (int j = 0; j < m; ++j) {
      raw.leq[i][j] = ds[i] % ds[j] == 0;
      raw.add[i][j] = index_of(std::gcd(ds[i], ds[j]));
    }
    for (int r = 0; r < n; ++r) raw.action[r][i] = index_of(std::gcd(n, r * ds[i]));
  }
  raw.zero = index_of(n);
  raw.top = index_of(1);
  return raw;
}

Structure generate_submodule_lattice(int n, int ring_cap) {
  if (n < 2) throw UsageError("submodule lattice needs n >= 2");
  if (n > ring_cap) {
    throw CapacityError("ring size " + std::to_string(n) + " exceeds the ring cap " + std::to_string(ring_cap));
  }
  auto ring = make_ring(zn_tables(n), ring_cap);
  auto module = make_le_module(submodule_lattice_tables(n), ring);
  return {ring, module};
}

Structure generate_chain(int n, int p, int length, int ring_cap) {
  if (length < 1) throw UsageError("chain length must be positive");
  if (n < 2 || p < 0 || p >= n) throw UsageError("chain needs n >= 2 and 0 <= p < n");
  if (n > ring_cap) {
    throw CapacityError("ring size " + std::to_string(n) + " exceeds the ring cap " + std::to_string(ring_cap));
  }
  auto ring = make_ring(zn_tables(n), ring_cap);
  const Ideal prime = principal_ideal(*ring, p);
  if (!is_prime_ideal(prime)) throw UsageError("(" + std::to_string(p) + ") is not a prime ideal of Z/" + std::to_string(n));
  RawModule raw;
  raw.size = length;
  raw.leq.assign(length, std::vector<bool>(length));
  raw.add.assign(length, std::vector<int>(length));
  raw.action.assign(n, std::vector<int>(length));
  for (int i = 0; i < length; ++i) {
    raw.names.push_back("c" + std::to_string(i));
    for (int j = 0; j < length; ++j) {
      raw.leq[i][j] = i <= j;
      raw.add[i][j] = std::max(i, j);
    }
    for (int r = 0; r < n; ++r) raw.action[r][i] = prime.contains(r) ? 0 : i;
  }
  raw.zero = 0;
  raw.top = length - 1;
  auto module = make_le_module(raw, ring);
  return {ring, module};
}

RawRing product_ring_tables(const RawRing& a, const RawRing& b) {
  RawRing r;
  r.size = a.size * b.size;
  r.add.assign(r.size, std::vector<int>(r.size));
  r.mul.assign(r.size, std::vector<int>(r.size));
  for (int x = 0; x < r.size; ++x) {
    const int xa = x / b.size, xb = x % b.size;
    for (int y = 0; y < r.size; ++y) {
      const int ya = y / b.size, yb = y % b.size;
      r.add[x][y] = a.add[xa][ya] * b.size + b.add[xb][yb];
      r.mul[x][y] = a.mul[xa][ya] * b.size + b.mul[xb][yb];
    }
  }
  r.zero = a.zero * b.size + b.zero;
  r.one = a.one * b.size + b.one;
  return r;
}

RawRing polynomial_quotient_tables(int modulus, std::span<const int> low) {
  const int d = static_cast<int>(low.size());
  if (modulus < 2 || d < 1) throw UsageError("polynomial quotient needs modulus >= 2 and degree >= 1");
  int size = 1;
  for (int i = 0; i < d; ++i) {
    size *= modulus;
    if (size > kMaxElements) throw CapacityError("polynomial quotient ring exceeds 64 elements");
  }
  // Element index = sum of coefficient[i] * modulus^i.
  auto decode = [&](int x) {
    std::vector<int> c(d);
    for (int i = 0; i < d; ++i, x /= modulus) c[i] = x % modulus;
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int x = 0;
    for (int i = d - 1; i >= 0; --i) x = x * modulus + c[i];
    return x;
  };
  RawRing r;
  r.size = size;
  r.add.assign(size, std::vector<int>(size));
  r.mul.assign(size, std::vector<int>(size));
  for (int x = 0; x < size; ++x) {
    const auto cx = decode(x);
    for (int y = 0; y < size; ++y) {
      const auto cy = decode(y);
      std::vector<int> sum(d);
      for (int i = 0; i < d; ++i) sum[i] = (cx[i] + cy[i]) % modulus;
      r.add[x][y] = encode(sum);
      std::vector<int> prod(2 * d - 1, 0);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + cx[i] * cy[j]) % modulus;
      }
      // x^d = -(c[d-1] x^(d-1) + ... + c[0])
      for (int e = 2 * d - 2; e >= d; --e) {
        const int lead = prod[e];
        prod[e] = 0;
        for (int i = 0; i < d; ++i) {
          prod[e - d + i] = ((prod[e - d + i] - lead * low[i]) % modulus + modulus) % modulus;
        }
      }
      prod.resize(d);
      r.mul[x][y] = encode(prod);
    }
  }
  r.zero = 0;
  r.one = d >= 1 ? 1 : 0;
  return r;
}

Structure generate_random(std::uint64_t seed, int max_ring, int max_module) {
  if (max_ring < 1 || max_module < 1) throw UsageError("random generation needs positive bounds");
  if (max_ring > kDefaultRingCap || max_module > kDefaultModuleCap) {
    throw CapacityError("random generation bounds exceed the 64-element caps");
  }
  constexpr int kBudget = 500;
  Draw draw(seed);
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    auto ring = make_ring(sample_ring(draw, max_ring));
    const int k = ring->size();
    if (max_module == 1 || k == 1) {
      return {ring, make_le_module(trivial_module(k), ring)};
    }
    std::vector<Ideal> proper;
    for (const auto& i : ring->ideals()) {
      if (i.is_proper()) proper.push_back(i);
    }
    BaseModule base = quotient_module(*ring, proper[draw.below(static_cast<int>(proper.size()))]);
    if (draw.below(4) == 0) {
      const auto other = quotient_module(*ring, proper[draw.below(static_cast<int>(proper.size()))]);
      if (base.size * other.size <= 16) base = direct_sum(base, other, k);
    }
    std::vector<Mask> gens;
    switch (draw.below(3)) {
      case 0: {  // every submodule of the base module
        gens = submodules(base, k);
        break;
      }
      case 1: {  // random zero-containing subsets
        const int count = 1 + draw.below(2);
        for (int g = 0; g < count; ++g) {
          Mask m = bit(0);
          for (int i = 1; i < base.size; ++i) {
            if (draw.coin()) m |= bit(i);
          }
          gens.push_back(m);
        }
        break;
      }
      default: {  // a few submodules and one arbitrary subset
        const auto subs = submodules(base, k);
        gens.push_back(subs[draw.below(static_cast<int>(subs.size()))]);
        Mask m = bit(0);
        for (int i = 1; i < base.size; ++i) {
          if (draw.coin()) m |= bit(i);
        }
        gens.push_back(m);
      }
    }
    const auto elems = closure(base, k, gens, draw.coin(), max_module);
    if (elems.empty()) continue;
    auto validated = validate_le_module(subset_module(base, k, elems), ring);
    if (validated.ok()) return {ring, validated.module};
  }
  throw CapacityError("random generation exhausted its sampling budget after " + std::to_string(kBudget) +
                      " attempts");
}

}  // namespace lemod
