#pragma once

// Commutator calculus: the standard group identities, the elementary
// relations, the generator-rewriting case analysis for
// [e_{i',j'}(alpha), ^{e_{i,j}(a)} e_{j,i}(beta)], and the seven-term
// expansion of [1 + delta, 1 + eps].
//
// Conventions: [x, y] = x y x^-1 y^-1 and ^x y = x y x^-1.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mcf/generators.hpp"
#include "mcf/ideal.hpp"
#include "mcf/matrix.hpp"

namespace mcf {

/// A group element paired with its inverse.
struct Invertible {
  Mat value;
  Mat inverse;

  static Invertible of(const Mat& m) { return {m, mat_inverse(m)}; }
};

inline Invertible operator*(const Invertible& x, const Invertible& y) {
  return {mat_mul(x.value, y.value), mat_mul(y.inverse, x.inverse)};
}
inline Invertible inv(const Invertible& x) { return {x.inverse, x.value}; }
inline Invertible comm(const Invertible& x, const Invertible& y) { return x * y * inv(x) * inv(y); }
inline Invertible conj(const Invertible& x, const Invertible& y) { return x * y * inv(x); }

struct IdentityReport {
  bool c1 = false;  // [x,yz] = [x,y] ^y[x,z]
  bool c2 = false;  // [xy,z] = ^x[y,z] [x,z]
  bool c3 = false;  // Hall-Witt
  bool c4 = false;  // [x,^y z] = ^y[^{y^-1}x, z]
  bool c5 = false;  // [^y x, z] = ^y[x, ^{y^-1}z]
  bool hall_witt_variant = false;  // [x,[y^-1,z]] = ^{y^-1 x}[[x^-1,y],z] ^{y^-1 z}[[z^-1,x],y]

  bool all() const { return c1 && c2 && c3 && c4 && c5 && hall_witt_variant; }
};

inline IdentityReport check_group_identities(const Invertible& x, const Invertible& y, const Invertible& z) {
  auto eq = [](const Invertible& a, const Invertible& b) { return a.value == b.value; };
  IdentityReport r;
  r.c1 = eq(comm(x, y * z), comm(x, y) * conj(y, comm(x, z)));
  r.c2 = eq(comm(x * y, z), conj(x, comm(y, z)) * comm(x, z));
  r.c3 = (conj(x, comm(comm(inv(x), y), z)) * conj(z, comm(comm(inv(z), x), y)) * conj(y, comm(comm(inv(y), z), x)))
             .value.is_identity();
  r.c4 = eq(comm(x, conj(y, z)), conj(y, comm(conj(inv(y), x), z)));
  r.c5 = eq(comm(conj(y, x), z), conj(y, comm(x, conj(inv(y), z))));
  r.hall_witt_variant = eq(comm(x, comm(inv(y), z)), conj(inv(y) * x, comm(comm(inv(x), y), z)) *
                                                         conj(inv(y) * z, comm(comm(inv(z), x), y)));
  return r;
}

inline IdentityReport check_group_identities(const Mat& x, const Mat& y, const Mat& z) {
  for (const Mat* m : {&x, &y, &z})
    if (!mat_is_invertible(*m)) throw Error(ErrorCode::not_invertible, "identity check needs invertible inputs");
  return check_group_identities(Invertible::of(x), Invertible::of(y), Invertible::of(z));
}

/// [x, u_1...u_k] = prod_i ^{u_1...u_{i-1}}[x, u_i] and
/// [u_1...u_k, x] = prod_i ^{u_1...u_{k-i}}[u_{k-i+1}, x].
inline bool check_product_expansions(const Invertible& x, const std::vector<Invertible>& us) {
  if (us.empty()) return true;
  const RingTable* r = x.value.ring_ptr();
  const int n = x.value.n();
  const Invertible one{Mat::identity(r, n), Mat::identity(r, n)};
  Invertible prod = one;
  for (const auto& u : us) prod = prod * u;

  Invertible left = one, prefix = one;
  for (const auto& u : us) {
    left = left * conj(prefix, comm(x, u));
    prefix = prefix * u;
  }
  const std::size_t k = us.size();
  Invertible right = one;
  for (std::size_t i = 1; i <= k; ++i) {
    Invertible head = one;
    for (std::size_t j = 0; j < k - i; ++j) head = head * us[j];
    right = right * conj(head, comm(us[k - i], x));
  }
  return comm(x, prod).value == left.value && comm(prod, x).value == right.value;
}

struct ElementaryRelationReport {
  bool e1 = true;  // e_ij(a) e_ij(b) = e_ij(a+b)
  bool e2 = true;  // [e_ij(a), e_kl(b)] = 1 for i != l, j != k
  bool e3 = true;  // [e_ij(a), e_jk(b)] = e_ik(ab) for i != k

  bool all() const { return e1 && e2 && e3; }
};

/// Checks the elementary relations for one pair (a, b) across every index pattern.
inline ElementaryRelationReport check_elementary_relations(const Ring& ring, int n, Elem a, Elem b) {
  ElementaryRelationReport rep;
  auto e = [&](int i, int j, Elem v) {
    return Invertible{elementary(ring, n, i, j, v), elementary(ring, n, i, j, ring->neg(v))};
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (mat_mul(e(i, j, a).value, e(i, j, b).value) != elementary(ring, n, i, j, ring->add(a, b))) rep.e1 = false;
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (k == l) continue;
          if (i != l && j != k && !comm(e(i, j, a), e(k, l, b)).value.is_identity()) rep.e2 = false;
        }
      for (int k = 1; k <= n; ++k) {
        if (k == j || k == i) continue;
        if (comm(e(i, j, a), e(j, k, b)).value != elementary(ring, n, i, k, ring->mul(a, b))) rep.e3 = false;
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Structured words

struct GenWord;
using WordPtr = std::shared_ptr<const GenWord>;

struct WordFactor {
  enum class Kind { elementary, inverse_elementary, conjugate, commutator };

  Kind kind = Kind::elementary;
  ElemFactor elem;        // elementary kinds
  WordPtr left, right;    // conjugate: ^{left}(right); commutator: [left, right]
};

struct GenWord {
  std::vector<WordFactor> factors;
  Mat value;  // evaluation of `factors`, fixed at construction
};

namespace detail {

inline Mat evaluate_factors(const Ring& ring, int n, const std::vector<WordFactor>& fs, bool inverse);

inline Mat evaluate_factor(const Ring& ring, int n, const WordFactor& f, bool inverse) {
  switch (f.kind) {
    case WordFactor::Kind::elementary:
    case WordFactor::Kind::inverse_elementary: {
      const bool negate = (f.kind == WordFactor::Kind::inverse_elementary) != inverse;
      return elementary(ring, n, f.elem.i, f.elem.j, negate ? ring->neg(f.elem.value) : f.elem.value);
    }
    case WordFactor::Kind::conjugate: {
      Mat w = evaluate_factors(ring, n, f.left->factors, false);
      Mat w_inv = evaluate_factors(ring, n, f.left->factors, true);
      return mat_mul(mat_mul(w, evaluate_factors(ring, n, f.right->factors, inverse)), w_inv);
    }
    case WordFactor::Kind::commutator: {
      // [w, v]^-1 = [v, w]
      const auto& a = inverse ? f.right : f.left;
      const auto& b = inverse ? f.left : f.right;
      Mat x = evaluate_factors(ring, n, a->factors, false);
      Mat xi = evaluate_factors(ring, n, a->factors, true);
      Mat y = evaluate_factors(ring, n, b->factors, false);
      Mat yi = evaluate_factors(ring, n, b->factors, true);
      return mat_mul(mat_mul(mat_mul(x, y), xi), yi);
    }
  }
  return Mat::identity(ring.get(), n);
}

inline Mat evaluate_factors(const Ring& ring, int n, const std::vector<WordFactor>& fs, bool inverse) {
  Mat acc = Mat::identity(ring.get(), n);
  if (!inverse) {
    for (const auto& f : fs) acc = mat_mul(acc, evaluate_factor(ring, n, f, false));
  } else {
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) acc = mat_mul(acc, evaluate_factor(ring, n, *it, true));
  }
  return acc;
}

}  // namespace detail

/// Re-evaluates the factor list from scratch (independent of `value`).
inline Mat evaluate(const Ring& ring, int n, const GenWord& w) {
  return detail::evaluate_factors(ring, n, w.factors, false);
}

inline WordPtr word_of(const Ring& ring, int n, std::vector<WordFactor> fs) {
  auto w = std::make_shared<GenWord>();
  w->factors = std::move(fs);
  w->value = detail::evaluate_factors(ring, n, w->factors, false);
  return w;
}

inline WordPtr word_elem(const Ring& ring, int n, int i, int j, Elem v) {
  WordFactor f;
  f.kind = WordFactor::Kind::elementary;
  f.elem = {i, j, v};
  return word_of(ring, n, {f});
}

inline WordPtr word_conj(const Ring& ring, int n, WordPtr outer, WordPtr inner) {
  WordFactor f;
  f.kind = WordFactor::Kind::conjugate;
  f.left = std::move(outer);
  f.right = std::move(inner);
  return word_of(ring, n, {f});
}

inline WordPtr word_comm(const Ring& ring, int n, WordPtr a, WordPtr b) {
  WordFactor f;
  f.kind = WordFactor::Kind::commutator;
  f.left = std::move(a);
  f.right = std::move(b);
  return word_of(ring, n, {f});
}

inline std::string render(const RingTable& r, const GenWord& w);

inline std::string render(const RingTable& r, const WordFactor& f) {
  switch (f.kind) {
    case WordFactor::Kind::elementary: return render_factor(r, f.elem);
    case WordFactor::Kind::inverse_elementary: return render_factor(r, f.elem) + "^-1";
    case WordFactor::Kind::conjugate: return "^{" + render(r, *f.left) + "}" + render(r, *f.right);
    case WordFactor::Kind::commutator: return "[" + render(r, *f.left) + "," + render(r, *f.right) + "]";
  }
  return {};
}

/// e.g. "^{e(1,2;1)}e(2,3;2)"; the empty word renders as "1".
inline std::string render(const RingTable& r, const GenWord& w) {
  if (w.factors.empty()) return "1";
  std::string out;
  for (const auto& f : w.factors) out += render(r, f);
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting [e_{i',j'}(alpha), ^{e_{i,j}(a)} e_{j,i}(beta)]

enum class ComgenCase {
  transpose,       // i' = j, j' = i: already a listed generator
  left_adjacent,   // i' = j, j' != i
  right_adjacent,  // i' != j, j' = i
  same,            // i' = i, j' = j
  shared_row,      // i' = i, j' != j
  shared_column,   // i' != i, j' = j
  disjoint,        // {i', j'} and {i, j} disjoint
};

inline const char* to_string(ComgenCase c) {
  switch (c) {
    case ComgenCase::transpose: return "transpose";
    case ComgenCase::left_adjacent: return "left-adjacent";
    case ComgenCase::right_adjacent: return "right-adjacent";
    case ComgenCase::same: return "same";
    case ComgenCase::shared_row: return "shared-row";
    case ComgenCase::shared_column: return "shared-column";
    case ComgenCase::disjoint: return "disjoint";
  }
  return "?";
}

struct ComgenIndices {
  int ip = 0, jp = 0;  // (i', j')
  int i = 0, j = 0;
};

struct Decomposition {
  ComgenCase which = ComgenCase::disjoint;
  WordPtr word;     // the rewritten product
  Mat commutator;   // direct evaluation of the input commutator
};

inline ComgenCase classify(const ComgenIndices& ix) {
  if (ix.ip == ix.j && ix.jp == ix.i) return ComgenCase::transpose;
  if (ix.ip == ix.j) return ComgenCase::left_adjacent;
  if (ix.jp == ix.i) return ComgenCase::right_adjacent;
  if (ix.ip == ix.i && ix.jp == ix.j) return ComgenCase::same;
  if (ix.ip == ix.i) return ComgenCase::shared_row;
  if (ix.jp == ix.j) return ComgenCase::shared_column;
  return ComgenCase::disjoint;
}

/// Rewrites [e_{i',j'}(alpha), ^{e_{i,j}(a)} e_{j,i}(beta)] into the listed
/// generator forms. Throws if the rewritten word does not evaluate to the
/// commutator.
inline Decomposition comgenerator_decompose(const Ring& ring, int n, ComgenIndices ix, Elem alpha, Elem a, Elem beta,
                                            const IdealSet* I = nullptr, const IdealSet* J = nullptr) {
  if (n < 3 || n > kMaxDim) throw Error(ErrorCode::index_constraint, "decomposition needs 3 <= n <= 4");
  for (int v : {ix.ip, ix.jp, ix.i, ix.j})
    if (v < 1 || v > n) throw Error(ErrorCode::index_constraint, "index out of range");
  if (ix.ip == ix.jp || ix.i == ix.j) throw Error(ErrorCode::index_constraint, "elementary indices must differ");
  if (I && !I->contains(alpha)) throw Error(ErrorCode::precondition, "alpha is not in I");
  if (J && !J->contains(beta)) throw Error(ErrorCode::precondition, "beta is not in J");

  const RingTable& r = *ring;
  auto e = [&](int p, int q, Elem v) { return word_elem(ring, n, p, q, v); };
  WordPtr frame = e(ix.i, ix.j, a);
  Decomposition d;
  d.which = classify(ix);
  d.commutator = word_comm(ring, n, e(ix.ip, ix.jp, alpha), word_conj(ring, n, frame, e(ix.j, ix.i, beta)))->value;

  switch (d.which) {
    case ComgenCase::transpose:
      d.word = word_comm(ring, n, e(ix.j, ix.i, alpha), word_conj(ring, n, frame, e(ix.j, ix.i, beta)));
      break;
    case ComgenCase::left_adjacent:
      d.word = word_conj(ring, n, frame, e(ix.j, ix.jp, r.mul(r.mul(beta, a), alpha)));
      break;
    case ComgenCase::right_adjacent:
      d.word = word_conj(ring, n, frame, e(ix.ip, ix.i, r.mul(r.mul(alpha, a), beta)));
      break;
    case ComgenCase::same:
      d.word = word_conj(ring, n, frame, word_comm(ring, n, e(ix.i, ix.j, alpha), e(ix.j, ix.i, beta)));
      break;
    case ComgenCase::shared_row:
      d.word = word_conj(ring, n, frame, e(ix.j, ix.jp, r.neg(r.mul(beta, alpha))));
      break;
    case ComgenCase::shared_column:
      d.word = word_conj(ring, n, frame, e(ix.ip, ix.i, r.mul(alpha, beta)));
      break;
    case ComgenCase::disjoint:
      d.word = word_of(ring, n, {});
      break;
  }
  if (evaluate(ring, n, *d.word) != d.commutator)
    throw Error(ErrorCode::precondition, std::string("rewritten word disagrees with commutator in case ") +
                                             to_string(d.which));
  return d;
}

// ---------------------------------------------------------------------------
// [1 + delta, 1 + eps] expansion

struct ExpansionParts {
  Mat delta, delta_inv;  // e = 1 + delta, e^-1 = 1 + delta_inv
  Mat eps, eps_inv;      // g = 1 + eps,   g^-1 = 1 + eps_inv

  static ExpansionParts of(const Mat& e, const Mat& g) {
    const Mat one = Mat::identity(e.ring_ptr(), e.n());
    return {mat_sub(e, one), mat_sub(mat_inverse(e), one), mat_sub(g, one), mat_sub(mat_inverse(g), one)};
  }

  /// d + d' + d d' = d + d' + d' d = 0, and the same for eps.
  bool consistent() const {
    auto ok = [](const Mat& d, const Mat& dp) {
      const Mat s = mat_add(d, dp);
      const Mat zero = Mat::zero(d.ring_ptr(), d.n());
      return mat_add(s, mat_mul(d, dp)) == zero && mat_add(s, mat_mul(dp, d)) == zero;
    };
    return ok(delta, delta_inv) && ok(eps, eps_inv);
  }

  /// 1 + d'e' + e d' + e d' e' + d d' e' + d e d' + d e d' e'.
  Mat seven_term() const {
    const auto& d = delta;
    const auto& dp = delta_inv;
    const auto& ep = eps_inv;
    const auto& g = eps;
    Mat acc = Mat::identity(d.ring_ptr(), d.n());
    for (const Mat& t : {mat_mul(dp, ep), mat_mul(g, dp), mat_mul(mat_mul(g, dp), ep), mat_mul(mat_mul(d, dp), ep),
                         mat_mul(mat_mul(d, g), dp), mat_mul(mat_mul(mat_mul(d, g), dp), ep)})
      acc = mat_add(acc, t);
    return acc;
  }
};

struct ExpansionReport {
  bool parts_consistent = false;
  bool seven_term_matches = false;
  bool entries_in_sym_product = false;
  Mat commutator;

  bool ok() const { return parts_consistent && seven_term_matches && entries_in_sym_product; }
};

/// For g in GL_n(A, I) and e in GL_n(A, J): the seven-term form of [e, g]
/// agrees with direct evaluation and [e, g] - 1 has entries in IJ + JI.
inline ExpansionReport expansion_check(const Mat& e, const Mat& g, const IdealSet& I, const IdealSet& J) {
  if (!congruent_to_identity(g, I)) throw Error(ErrorCode::precondition, "g is not congruent to 1 mod I");
  if (!congruent_to_identity(e, J)) throw Error(ErrorCode::precondition, "e is not congruent to 1 mod J");
  const auto parts = ExpansionParts::of(e, g);
  ExpansionReport rep;
  rep.parts_consistent = parts.consistent();
  rep.commutator = comm(Invertible{e, mat_add(parts.delta_inv, Mat::identity(e.ring_ptr(), e.n()))},
                        Invertible{g, mat_add(parts.eps_inv, Mat::identity(e.ring_ptr(), e.n()))})
                       .value;
  rep.seven_term_matches = parts.seven_term() == rep.commutator;
  rep.entries_in_sym_product = congruent_to_identity(rep.commutator, sym_product(I, J));
  return rep;
}

}  // namespace mcf
