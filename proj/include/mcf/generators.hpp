#pragma once

// Generator descriptors and the generator factories for relative elementary
// and congruence subgroups.

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "mcf/ideal.hpp"
#include "mcf/matrix.hpp"

namespace mcf {

struct ElemFactor {
  int i = 0, j = 0;  // 1-based
  Elem value = 0;

  bool operator==(const ElemFactor&) const = default;
};

/// A group element together with the symbolic form that produced it and its
/// inverse. The inverse is carried so commutators never need a solve.
struct GenDescriptor {
  enum class Kind { elementary, conjugated_elementary, diagonal_unit, derived };

  Kind kind = Kind::derived;
  std::vector<ElemFactor> outer;  // conjugating product, left to right
  ElemFactor inner;               // diagonal_unit: i = j = position, value = unit
  std::string label;              // derived elements only
  Mat value;
  Mat inverse;
};

namespace detail {

inline void check_inverse(const GenDescriptor& d) {
  if (!mat_mul(d.value, d.inverse).is_identity() || !mat_mul(d.inverse, d.value).is_identity())
    throw Error(ErrorCode::precondition, "generator descriptor inverse does not match its value");
}

inline Mat product_of(const Ring& ring, int n, const std::vector<ElemFactor>& fs, bool inverted) {
  Mat acc = Mat::identity(ring.get(), n);
  if (!inverted) {
    for (const auto& f : fs) acc = mat_mul(acc, elementary(ring, n, f.i, f.j, f.value));
  } else {
    for (auto it = fs.rbegin(); it != fs.rend(); ++it)
      acc = mat_mul(acc, elementary(ring, n, it->i, it->j, ring->neg(it->value)));
  }
  return acc;
}

}  // namespace detail

inline GenDescriptor make_elementary(const Ring& ring, int n, int i, int j, Elem alpha) {
  GenDescriptor d;
  d.kind = GenDescriptor::Kind::elementary;
  d.inner = {i, j, alpha};
  d.value = elementary(ring, n, i, j, alpha);
  d.inverse = elementary(ring, n, i, j, ring->neg(alpha));
  detail::check_inverse(d);
  return d;
}

/// ^{o_1 ... o_k} e_{i,j}(alpha).
inline GenDescriptor make_conjugated(const Ring& ring, int n, std::vector<ElemFactor> outer, ElemFactor inner) {
  GenDescriptor d;
  d.kind = GenDescriptor::Kind::conjugated_elementary;
  const Mat o = detail::product_of(ring, n, outer, false);
  const Mat o_inv = detail::product_of(ring, n, outer, true);
  d.value = mat_mul(mat_mul(o, elementary(ring, n, inner.i, inner.j, inner.value)), o_inv);
  d.inverse = mat_mul(mat_mul(o, elementary(ring, n, inner.i, inner.j, ring->neg(inner.value))), o_inv);
  d.outer = std::move(outer);
  d.inner = inner;
  detail::check_inverse(d);
  return d;
}

inline GenDescriptor make_diagonal_unit(const Ring& ring, int n, int k, Elem unit) {
  GenDescriptor d;
  d.kind = GenDescriptor::Kind::diagonal_unit;
  d.inner = {k, k, unit};
  d.value = diagonal_unit(ring, n, k, unit);
  d.inverse = diagonal_unit(ring, n, k, ring->unit_inverse(unit));
  detail::check_inverse(d);
  return d;
}

inline GenDescriptor make_derived(Mat value, Mat inverse, std::string label) {
  GenDescriptor d;
  d.kind = GenDescriptor::Kind::derived;
  d.label = std::move(label);
  d.value = value;
  d.inverse = inverse;
  detail::check_inverse(d);
  return d;
}

/// Same element with value and inverse swapped.
inline GenDescriptor inverted(const GenDescriptor& d) {
  return make_derived(d.inverse, d.value, "(" + (d.label.empty() ? std::string("g") : d.label) + ")^-1");
}

inline std::string render_factor(const RingTable& r, const ElemFactor& f) {
  return "e(" + std::to_string(f.i) + "," + std::to_string(f.j) + ";" + r.name(f.value) + ")";
}

inline std::string render(const GenDescriptor& d) {
  const RingTable& r = d.value.ring();
  switch (d.kind) {
    case GenDescriptor::Kind::elementary:
      return render_factor(r, d.inner);
    case GenDescriptor::Kind::conjugated_elementary: {
      std::string out = "^{";
      for (const auto& f : d.outer) out += render_factor(r, f);
      return out + "}" + render_factor(r, d.inner);
    }
    case GenDescriptor::Kind::diagonal_unit:
      return "d(" + std::to_string(d.inner.i) + ";" + r.name(d.inner.value) + ")";
    case GenDescriptor::Kind::derived:
      return d.label;
  }
  return {};
}

namespace detail {
inline void require_dim(int n) {
  if (n < 3 || n > kMaxDim) throw Error(ErrorCode::precondition, "group constructions need 3 <= n <= 4");
}

inline std::vector<GenDescriptor> dedupe_by_key(std::vector<GenDescriptor> gens) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<GenDescriptor> out;
  out.reserve(gens.size());
  for (auto& g : gens)
    if (seen.insert(g.value.key()).second) out.push_back(std::move(g));
  return out;
}
}  // namespace detail

/// Elementary matrices e_{i,j}(alpha), alpha in I: generators of E_n(I).
inline std::vector<GenDescriptor> elementary_generators(const IdealSet& ideal, int n) {
  detail::require_dim(n);
  const Ring& ring = ideal.ring();
  if (!key_fits(*ring, n)) throw Error(ErrorCode::key_overflow, "ring too large for 64-bit packing at this n");
  std::vector<GenDescriptor> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (Elem alpha : ideal.members())
        if (alpha != 0) out.push_back(make_elementary(ring, n, i, j, alpha));
    }
  return out;
}

/// ^{e_{i,j}(a)} e_{j,i}(alpha) over all i != j, a in A, alpha in I.
/// With dedupe = false the raw list (n(n-1)|A||I| entries) is returned.
inline std::vector<GenDescriptor> suslin_generators(const IdealSet& ideal, int n, bool dedupe = true) {
  detail::require_dim(n);
  const Ring& ring = ideal.ring();
  if (!key_fits(*ring, n)) throw Error(ErrorCode::key_overflow, "ring too large for 64-bit packing at this n");
  std::vector<GenDescriptor> out;
  out.reserve(static_cast<std::size_t>(n * (n - 1)) * ring->order() * ideal.size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int a = 0; a < ring->order(); ++a)
        for (Elem alpha : ideal.members())
          out.push_back(make_conjugated(ring, n, {{i, j, static_cast<Elem>(a)}}, {j, i, alpha}));
    }
  return dedupe ? detail::dedupe_by_key(std::move(out)) : out;
}

/// Suslin generators plus the one-spot diagonal matrices diag(.., u, ..) with
/// u a unit congruent to 1 mod I. Over a finite (hence semilocal) ring these
/// generate GL_n(A, I); the claim is validated against congruence_members.
inline std::vector<GenDescriptor> gl_generators(const IdealSet& ideal, int n) {
  auto out = suslin_generators(ideal, n, false);
  const Ring& ring = ideal.ring();
  for (int k = 1; k <= n; ++k)
    for (Elem u : ring->units())
      if (ideal.contains(ring->sub(u, 1))) out.push_back(make_diagonal_unit(ring, n, k, u));
  return detail::dedupe_by_key(std::move(out));
}

}  // namespace mcf
