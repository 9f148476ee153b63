#pragma once

// Finite unital rings realized as indexed elements with table-driven
// arithmetic. Index 0 is always zero and index 1 is always one; the remaining
// elements follow the lexicographic order of their coordinate tuples.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mcf/error.hpp"

namespace mcf {

using Elem = std::uint8_t;

inline constexpr int kDefaultRingCap = 64;
inline constexpr int kMaxRingOrder = 256;

struct RingSpec {
  enum class Kind { modular, poly_quotient, product, triangular, full_matrix };

  Kind kind = Kind::modular;
  int modulus = 0;            // modular, and the coefficient ring of poly_quotient
  std::vector<int> poly;      // ascending coefficients of the monic modulus
  int size = 0;               // triangular / full_matrix dimension
  std::vector<RingSpec> parts;  // product factors, or the single base ring

  static RingSpec modular_ring(int m) {
    RingSpec s;
    s.kind = Kind::modular;
    s.modulus = m;
    return s;
  }
  static RingSpec poly_ring(int m, std::vector<int> ascending) {
    RingSpec s;
    s.kind = Kind::poly_quotient;
    s.modulus = m;
    s.poly = std::move(ascending);
    return s;
  }
  static RingSpec product_ring(std::vector<RingSpec> factors) {
    RingSpec s;
    s.kind = Kind::product;
    s.parts = std::move(factors);
    return s;
  }
  static RingSpec triangular_ring(int k, RingSpec base) {
    RingSpec s;
    s.kind = Kind::triangular;
    s.size = k;
    s.parts.push_back(std::move(base));
    return s;
  }
  static RingSpec matrix_ring(int k, RingSpec base) {
    RingSpec s;
    s.kind = Kind::full_matrix;
    s.size = k;
    s.parts.push_back(std::move(base));
    return s;
  }

  bool operator==(const RingSpec&) const = default;
};

namespace detail {

inline std::string poly_text(const std::vector<int>& coeffs, int modulus) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    int c = ((coeffs[k] % modulus) + modulus) % modulus;
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

inline void validate(const RingSpec& spec) {
  using K = RingSpec::Kind;
  switch (spec.kind) {
    case K::modular:
      if (spec.modulus < 2) throw Error(ErrorCode::invalid_spec, "modulus must be at least 2 (zero ring rejected)");
      return;
    case K::poly_quotient: {
      if (spec.modulus < 2) throw Error(ErrorCode::invalid_spec, "coefficient modulus must be at least 2");
      if (spec.poly.size() < 2) throw Error(ErrorCode::invalid_spec, "quotient polynomial must have degree >= 1");
      int lead = ((spec.poly.back() % spec.modulus) + spec.modulus) % spec.modulus;
      if (lead != 1 % spec.modulus) throw Error(ErrorCode::invalid_spec, "quotient polynomial must be monic");
      return;
    }
    case K::product:
      if (spec.parts.size() < 2) throw Error(ErrorCode::invalid_spec, "product needs at least two factors");
      for (const auto& p : spec.parts) validate(p);
      return;
    case K::triangular:
    case K::full_matrix:
      if (spec.size < 2) throw Error(ErrorCode::invalid_spec, "matrix ring size must be at least 2");
      if (spec.parts.size() != 1) throw Error(ErrorCode::invalid_spec, "matrix ring needs exactly one base ring");
      validate(spec.parts[0]);
      return;
  }
}

/// Canonical text form; the parser accepts it back unchanged.
inline std::string render(const RingSpec& spec) {
  using K = RingSpec::Kind;
  switch (spec.kind) {
    case K::modular:
      return "Z/" + std::to_string(spec.modulus);
    case K::poly_quotient:
      return "Z/" + std::to_string(spec.modulus) + "[x]/(" + detail::poly_text(spec.poly, spec.modulus) + ")";
    case K::product: {
      std::string out;
      for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        if (i) out += " x ";
        out += render(spec.parts[i]);
      }
      return out;
    }
    case K::triangular:
      return "UT" + std::to_string(spec.size) + "(" + render(spec.parts.at(0)) + ")";
    case K::full_matrix:
      return "M" + std::to_string(spec.size) + "(" + render(spec.parts.at(0)) + ")";
  }
  return {};
}

class RingTable {
 public:
  int order() const { return order_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }

  bool commutative() const { return commutative_; }
  const std::vector<Elem>& units() const { return units_; }
  bool is_unit(Elem a) const { return unit_inverse_[a] != kNoInverse; }
  Elem unit_inverse(Elem a) const {
    if (!is_unit(a)) throw Error(ErrorCode::not_invertible, "element " + name(a) + " is not a unit");
    return static_cast<Elem>(unit_inverse_[a]);
  }

  const std::string& name(Elem a) const { return names_.at(a); }

  /// Looks an element up by canonical name or alias; whitespace is ignored.
  std::optional<Elem> find(std::string_view text) const {
    std::string key;
    for (char c : text)
      if (c != ' ' && c != '\t') key.push_back(c);
    auto it = lookup_.find(key);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  const RingSpec& spec() const { return spec_; }
  std::string spec_text() const { return render(spec_); }

  /// log2(order) when the order is a power of two, otherwise 0.
  int radix_bits() const { return radix_bits_; }

  /// Underlying tables, row-major by (a, b).
  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }

  friend std::shared_ptr<const RingTable> build_ring(const RingSpec& spec, int cap);

 private:
  static constexpr int kNoInverse = -1;

  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * order_ + b; }

  RingSpec spec_;
  int order_ = 0;
  int radix_bits_ = 0;
  std::vector<Elem> add_, mul_, neg_;
  bool commutative_ = false;
  std::vector<Elem> units_;
  std::vector<int> unit_inverse_;
  std::vector<std::string> names_;
  std::map<std::string, Elem, std::less<>> lookup_;
};

using Ring = std::shared_ptr<const RingTable>;

namespace detail {

// Ring data before canonical reindexing: raw indices follow the
// lexicographic order of coordinate tuples.
struct RawRing {
  int order = 0;
  std::vector<int> add, mul;
  std::vector<std::string> names;
  int zero = 0, one = 0;
};

inline std::uint64_t spec_order(const RingSpec& spec, std::uint64_t cap) {
  using K = RingSpec::Kind;
  auto bounded_pow = [cap](std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
      r *= base;
      if (r > cap) return cap + 1;
    }
    return r;
  };
  switch (spec.kind) {
    case K::modular: return static_cast<std::uint64_t>(spec.modulus);
    case K::poly_quotient: return bounded_pow(spec.modulus, spec.poly.size() - 1);
    case K::product: {
      std::uint64_t r = 1;
      for (const auto& p : spec.parts) {
        r *= spec_order(p, cap);
        if (r > cap) return cap + 1;
      }
      return r;
    }
    case K::triangular: {
      auto k = static_cast<std::uint64_t>(spec.size);
      return bounded_pow(spec_order(spec.parts[0], cap), k * (k + 1) / 2);
    }
    case K::full_matrix: {
      auto k = static_cast<std::uint64_t>(spec.size);
      return bounded_pow(spec_order(spec.parts[0], cap), k * k);
    }
  }
  return cap + 1;
}

inline RawRing raw_modular(int m) {
  RawRing r;
  r.order = m;
  r.add.resize(static_cast<std::size_t>(m) * m);
  r.mul.resize(r.add.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      r.add[a * m + b] = (a + b) % m;
      r.mul[a * m + b] = (a * b) % m;
    }
  for (int a = 0; a < m; ++a) r.names.push_back(std::to_string(a));
  r.zero = 0;
  r.one = 1;
  return r;
}

inline RawRing raw_poly(int m, const std::vector<int>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  int q = 1;
  for (int i = 0; i < d; ++i) q *= m;
  auto coeffs = [&](int idx) {
    std::vector<int> c(d);
    for (int k = 0; k < d; ++k) {
      c[k] = idx % m;
      idx /= m;
    }
    return c;
  };
  auto index = [&](const std::vector<int>& c) {
    int idx = 0;
    for (int k = d - 1; k >= 0; --k) idx = idx * m + c[k];
    return idx;
  };
  std::vector<int> fm(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) fm[k] = ((f[k] % m) + m) % m;

  RawRing r;
  r.order = q;
  r.add.resize(static_cast<std::size_t>(q) * q);
  r.mul.resize(r.add.size());
  for (int a = 0; a < q; ++a) {
    auto ca = coeffs(a);
    for (int b = 0; b < q; ++b) {
      auto cb = coeffs(b);
      std::vector<int> s(d);
      for (int k = 0; k < d; ++k) s[k] = (ca[k] + cb[k]) % m;
      r.add[a * q + b] = index(s);
      std::vector<int> prod(2 * d, 0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % m;
      // x^d = -(f_0 + ... + f_{d-1} x^{d-1}) since f is monic.
      for (int k = 2 * d - 1; k >= d; --k) {
        int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int t = 0; t < d; ++t) prod[k - d + t] = ((prod[k - d + t] - c * fm[t]) % m + m) % m;
      }
      prod.resize(d);
      r.mul[a * q + b] = index(prod);
    }
  }
  for (int a = 0; a < q; ++a) r.names.push_back(poly_text(coeffs(a), m));
  r.zero = 0;
  r.one = 1;
  return r;
}

inline bool is_plain_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace detail

inline std::shared_ptr<const RingTable> build_ring(const RingSpec& spec, int cap = kDefaultRingCap);

namespace detail {

inline RawRing raw_product(const std::vector<Ring>& factors) {
  std::vector<int> sizes;
  int q = 1;
  for (const auto& f : factors) {
    sizes.push_back(f->order());
    q *= f->order();
  }
  const std::size_t k = factors.size();
  auto coords = [&](int idx) {
    std::vector<int> c(k);
    for (std::size_t i = k; i-- > 0;) {
      c[i] = idx % sizes[i];
      idx /= sizes[i];
    }
    return c;
  };
  auto index = [&](const std::vector<int>& c) {
    int idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * sizes[i] + c[i];
    return idx;
  };
  RawRing r;
  r.order = q;
  r.add.resize(static_cast<std::size_t>(q) * q);
  r.mul.resize(r.add.size());
  for (int a = 0; a < q; ++a) {
    auto ca = coords(a);
    for (int b = 0; b < q; ++b) {
      auto cb = coords(b);
      std::vector<int> s(k), p(k);
      for (std::size_t i = 0; i < k; ++i) {
        s[i] = factors[i]->add(static_cast<Elem>(ca[i]), static_cast<Elem>(cb[i]));
        p[i] = factors[i]->mul(static_cast<Elem>(ca[i]), static_cast<Elem>(cb[i]));
      }
      r.add[a * q + b] = index(s);
      r.mul[a * q + b] = index(p);
    }
  }
  for (int a = 0; a < q; ++a) {
    auto c = coords(a);
    std::string name = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) name += ",";
      name += factors[i]->name(static_cast<Elem>(c[i]));
    }
    r.names.push_back(name + ")");
  }
  r.zero = 0;
  r.one = index(std::vector<int>(k, 1));
  return r;
}

inline RawRing raw_matrix(int size, const Ring& base, bool upper_only) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < size; ++i)
    for (int j = upper_only ? i : 0; j < size; ++j) slots.emplace_back(i, j);
  const int b = base->order();
  const std::size_t k = slots.size();
  int q = 1;
  for (std::size_t i = 0; i < k; ++i) q *= b;

  auto coords = [&](int idx) {
    std::vector<int> c(k);
    for (std::size_t i = k; i-- > 0;) {
      c[i] = idx % b;
      idx /= b;
    }
    return c;
  };
  auto index = [&](const std::vector<int>& c) {
    int idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * b + c[i];
    return idx;
  };
  auto to_square = [&](const std::vector<int>& c) {
    std::vector<int> m(static_cast<std::size_t>(size) * size, 0);
    for (std::size_t s = 0; s < k; ++s) m[slots[s].first * size + slots[s].second] = c[s];
    return m;
  };
  auto from_square = [&](const std::vector<int>& m) {
    std::vector<int> c(k);
    for (std::size_t s = 0; s < k; ++s) c[s] = m[slots[s].first * size + slots[s].second];
    return c;
  };

  RawRing r;
  r.order = q;
  r.add.resize(static_cast<std::size_t>(q) * q);
  r.mul.resize(r.add.size());
  for (int x = 0; x < q; ++x) {
    auto cx = coords(x);
    auto mx = to_square(cx);
    for (int y = 0; y < q; ++y) {
      auto cy = coords(y);
      std::vector<int> s(k);
      for (std::size_t i = 0; i < k; ++i) s[i] = base->add(static_cast<Elem>(cx[i]), static_cast<Elem>(cy[i]));
      r.add[x * q + y] = index(s);
      auto my = to_square(cy);
      std::vector<int> p(static_cast<std::size_t>(size) * size, 0);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
          Elem acc = 0;
          for (int t = 0; t < size; ++t)
            acc = base->add(acc, base->mul(static_cast<Elem>(mx[i * size + t]), static_cast<Elem>(my[t * size + j])));
          p[i * size + j] = acc;
        }
      r.mul[x * q + y] = index(from_square(p));
    }
  }

  for (int x = 0; x < q; ++x) {
    auto c = coords(x);
    std::string name;
    for (std::size_t s = 0; s < k; ++s) {
      if (c[s] == 0) continue;
      if (!name.empty()) name += "+";
      const std::string& coef = base->name(static_cast<Elem>(c[s]));
      if (c[s] != 1) name += is_plain_number(coef) ? coef : "(" + coef + ")";
      name += "E" + std::to_string(slots[s].first + 1) + std::to_string(slots[s].second + 1);
    }
    r.names.push_back(name.empty() ? "0" : name);
  }
  std::vector<int> ident(static_cast<std::size_t>(size) * size, 0);
  for (int i = 0; i < size; ++i) ident[i * size + i] = 1;
  r.zero = 0;
  r.one = index(from_square(ident));
  return r;
}

inline RawRing raw_ring(const RingSpec& spec, int cap) {
  using K = RingSpec::Kind;
  switch (spec.kind) {
    case K::modular: return raw_modular(spec.modulus);
    case K::poly_quotient: return raw_poly(spec.modulus, spec.poly);
    case K::product: {
      std::vector<Ring> factors;
      for (const auto& p : spec.parts) factors.push_back(build_ring(p, cap));
      return raw_product(factors);
    }
    case K::triangular: return raw_matrix(spec.size, build_ring(spec.parts[0], cap), true);
    case K::full_matrix: return raw_matrix(spec.size, build_ring(spec.parts[0], cap), false);
  }
  throw Error(ErrorCode::invalid_spec, "unknown ring kind");
}

}  // namespace detail

inline std::shared_ptr<const RingTable> build_ring(const RingSpec& spec, int cap) {
  validate(spec);
  if (cap < 2 || cap > kMaxRingOrder)
    throw Error(ErrorCode::invalid_spec, "ring order cap must lie in [2, " + std::to_string(kMaxRingOrder) + "]");
  const std::uint64_t order = detail::spec_order(spec, static_cast<std::uint64_t>(cap));
  if (order > static_cast<std::uint64_t>(cap))
    throw Error(ErrorCode::cap_exceeded, "ring " + render(spec) + " exceeds order cap " + std::to_string(cap));

  detail::RawRing raw = detail::raw_ring(spec, cap);
  const int q = raw.order;

  // canonical position of each raw index: zero, one, then lexicographic
  std::vector<int> to_canon(q), from_canon;
  from_canon.push_back(raw.zero);
  from_canon.push_back(raw.one);
  for (int a = 0; a < q; ++a)
    if (a != raw.zero && a != raw.one) from_canon.push_back(a);
  for (int c = 0; c < q; ++c) to_canon[from_canon[c]] = c;

  auto table = std::make_shared<RingTable>();
  table->spec_ = spec;
  table->order_ = q;
  table->radix_bits_ = 0;
  if ((q & (q - 1)) == 0) {
    int bits = 0;
    while ((1 << bits) < q) ++bits;
    table->radix_bits_ = bits;
  }
  table->add_.resize(static_cast<std::size_t>(q) * q);
  table->mul_.resize(table->add_.size());
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      const std::size_t raw_ab = static_cast<std::size_t>(from_canon[a]) * q + from_canon[b];
      table->add_[static_cast<std::size_t>(a) * q + b] = static_cast<Elem>(to_canon[raw.add[raw_ab]]);
      table->mul_[static_cast<std::size_t>(a) * q + b] = static_cast<Elem>(to_canon[raw.mul[raw_ab]]);
    }
  table->neg_.assign(q, 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (table->add_[static_cast<std::size_t>(a) * q + b] == 0) {
        table->neg_[a] = static_cast<Elem>(b);
        break;
      }

  table->commutative_ = true;
  for (int a = 0; a < q && table->commutative_; ++a)
    for (int b = a + 1; b < q; ++b) {
      const auto x = static_cast<Elem>(a), y = static_cast<Elem>(b);
      if (table->mul(x, y) != table->mul(y, x)) {
        table->commutative_ = false;
        break;
      }
    }

  table->unit_inverse_.assign(q, RingTable::kNoInverse);
  for (int u = 0; u < q; ++u)
    for (int v = 0; v < q; ++v) {
      auto uu = static_cast<Elem>(u), vv = static_cast<Elem>(v);
      if (table->mul(uu, vv) == 1 && table->mul(vv, uu) == 1) {
        table->unit_inverse_[u] = v;
        table->units_.push_back(uu);
        break;
      }
    }

  table->names_.resize(q);
  for (int c = 0; c < q; ++c) {
    table->names_[c] = raw.names[from_canon[c]];
    table->lookup_.emplace(table->names_[c], static_cast<Elem>(c));
  }
  table->lookup_.emplace("0", static_cast<Elem>(0));
  table->lookup_.emplace("1", static_cast<Elem>(1));
  return table;
}

/// Verifies the ring axioms. Exhaustive up to order 64, otherwise samples
/// `samples` random triples. Returns the first violated law, or nullopt.
inline std::optional<std::string> check_ring_axioms(const RingTable& r, std::uint64_t seed = 1,
                                                    std::size_t samples = 10000) {
  const int q = r.order();
  auto law = [&](Elem a, Elem b, Elem c) -> std::optional<std::string> {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "additive associativity";
    if (r.add(a, b) != r.add(b, a)) return "additive commutativity";
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplicative associativity";
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "left distributivity";
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return "right distributivity";
    return std::nullopt;
  };
  for (int a = 0; a < q; ++a) {
    auto x = static_cast<Elem>(a);
    if (r.mul(0, x) != 0 || r.mul(x, 0) != 0) return "zero annihilates";
    if (r.mul(1, x) != x || r.mul(x, 1) != x) return "unit element";
    if (r.add(0, x) != x) return "additive identity";
    if (r.add(x, r.neg(x)) != 0) return "additive inverse";
  }
  if (q <= 64) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c)
          if (auto bad = law(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c))) return bad;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, q - 1);
    for (std::size_t s = 0; s < samples; ++s)
      if (auto bad = law(static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng))))
        return bad;
  }
  bool comm = true;
  for (int a = 0; a < q && comm; ++a)
    for (int b = 0; b < q; ++b)
      if (r.mul(static_cast<Elem>(a), static_cast<Elem>(b)) != r.mul(static_cast<Elem>(b), static_cast<Elem>(a))) {
        comm = false;
        break;
      }
  if (comm != r.commutative()) return "commutative flag";
  for (int a = 0; a < q; ++a) {
    bool has_inv = false;
    for (int b = 0; b < q && !has_inv; ++b) {
      const auto x = static_cast<Elem>(a), y = static_cast<Elem>(b);
      has_inv = r.mul(x, y) == 1 && r.mul(y, x) == 1;
    }
    if (has_inv != r.is_unit(static_cast<Elem>(a))) return "unit set";
  }
  return std::nullopt;
}

}  // namespace mcf
