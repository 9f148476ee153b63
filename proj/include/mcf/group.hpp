#pragma once

// Finite subgroups of GL_n(A) as hashed sets of packed matrices, plus the
// closure, normal closure and commutator-subgroup algorithms.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "mcf/generators.hpp"

namespace mcf {

inline constexpr std::size_t kDefaultMemberCap = std::size_t{1} << 24;
inline constexpr std::size_t kDefaultCongruenceCap = std::size_t{1} << 20;

class GroupSet;

namespace detail {
class ClosureBuilder;
}

class GroupSet {
 public:
  GroupSet() = default;

  /// A group known only by generators (members not enumerated). Used for
  /// congruence subgroups too large to list; commutator_subgroup only needs
  /// generators.
  static GroupSet lazy(Ring ring, int n, std::vector<GenDescriptor> gens, std::string label) {
    GroupSet g;
    g.ring_ = std::move(ring);
    g.n_ = n;
    g.generators_ = std::move(gens);
    g.label_ = std::move(label);
    g.materialized_ = false;
    return g;
  }

  const Ring& ring() const { return ring_; }
  int n() const { return n_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::vector<GenDescriptor>& generators() const { return generators_; }
  bool materialized() const { return materialized_; }

  std::size_t order() const {
    require_members();
    return keys_.size();
  }
  bool is_trivial() const { return order() == 1; }

  bool contains_key(std::uint64_t key) const {
    require_members();
    return members_.count(key) != 0;
  }
  bool contains(const Mat& m) const { return contains_key(m.key()); }

  /// Member keys in discovery order.
  const std::vector<std::uint64_t>& keys() const {
    require_members();
    return keys_;
  }
  std::vector<std::uint64_t> sorted_keys() const {
    auto out = keys();
    std::sort(out.begin(), out.end());
    return out;
  }
  Mat member(std::size_t idx) const { return Mat::unpack(ring_.get(), n_, keys_.at(idx)); }

 private:
  friend class detail::ClosureBuilder;

  void require_members() const {
    if (!materialized_)
      throw Error(ErrorCode::precondition, "group '" + label_ + "' is known only by generators");
  }

  Ring ring_;
  int n_ = 0;
  std::string label_;
  std::vector<GenDescriptor> generators_;
  std::unordered_set<std::uint64_t> members_;
  std::vector<std::uint64_t> keys_;
  bool materialized_ = true;
};

namespace detail {

// Incremental subgroup builder. Each accepted generator extends the current
// group H to <H, g> by adjoining right cosets H x until the set is closed
// under right multiplication by every retained generator. Generators that
// already lie in the group are skipped, so the retained list stays short.
class ClosureBuilder {
 public:
  ClosureBuilder(Ring ring, int n, std::size_t cap, std::string label)
      : ring_(std::move(ring)), n_(n), cap_(cap), label_(std::move(label)) {
    if (!key_fits(*ring_, n_)) throw Error(ErrorCode::key_overflow, "ring too large for 64-bit packing at this n");
    const std::uint64_t id = Mat::identity(ring_.get(), n_).key();
    set_.insert(id);
    list_.push_back(id);
  }

  bool contains(std::uint64_t key) const { return set_.count(key) != 0; }
  std::size_t size() const { return list_.size(); }
  const std::vector<GenDescriptor>& generators() const { return gens_; }

  bool add(const GenDescriptor& g) {
    if (contains(g.value.key())) return false;
    extend(g);
    return true;
  }

  template <typename Make>
  bool add_if_new(const Mat& value, Make&& make) {
    if (contains(value.key())) return false;
    extend(make());
    return true;
  }

  GroupSet finish() && {
    GroupSet g;
    g.ring_ = ring_;
    g.n_ = n_;
    g.label_ = std::move(label_);
    g.generators_ = std::move(gens_);
    g.members_ = std::move(set_);
    g.keys_ = std::move(list_);
    g.materialized_ = true;
    return g;
  }

 private:
  void insert(std::uint64_t key) {
    set_.insert(key);
    list_.push_back(key);
    if (list_.size() > cap_) throw CapExceeded("closure of " + label_ + " exceeds member cap", list_.size());
  }

  void extend(const GenDescriptor& g) {
    const std::size_t prev = list_.size();
    gens_.push_back(g);
    std::vector<Mat> reps;
    auto add_coset = [&](const Mat& x) {
      for (std::size_t idx = 0; idx < prev; ++idx)
        insert(mat_mul(Mat::unpack(ring_.get(), n_, list_[idx]), x).key());
      reps.push_back(x);
    };
    add_coset(g.value);
    for (std::size_t r = 0; r < reps.size(); ++r)
      for (const auto& s : gens_) {
        Mat t = mat_mul(reps[r], s.value);
        if (!contains(t.key())) add_coset(t);
      }
  }

  Ring ring_;
  int n_;
  std::size_t cap_;
  std::string label_;
  std::unordered_set<std::uint64_t> set_;
  std::vector<std::uint64_t> list_;
  std::vector<GenDescriptor> gens_;
};

inline std::vector<GenDescriptor> sorted_by_key(std::vector<GenDescriptor> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const GenDescriptor& a, const GenDescriptor& b) { return a.value.key() < b.value.key(); });
  return gens;
}

// Conjugates every retained generator by every ambient generator and its
// inverse until nothing new appears.
inline void close_under_conjugation(ClosureBuilder& builder, const std::vector<GenDescriptor>& ambient) {
  for (std::size_t idx = 0; idx < builder.generators().size(); ++idx) {
    // copied: adding generators may reallocate the list
    const GenDescriptor r = builder.generators()[idx];
    for (const auto& a : ambient) {
      Mat c = mat_mul(mat_mul(a.value, r.value), a.inverse);
      builder.add_if_new(c, [&] { return make_derived(c, mat_mul(mat_mul(a.value, r.inverse), a.inverse), "conj"); });
      Mat d = mat_mul(mat_mul(a.inverse, r.value), a.value);
      builder.add_if_new(d, [&] { return make_derived(d, mat_mul(mat_mul(a.inverse, r.inverse), a.value), "conj"); });
    }
  }
}

inline void require_space(const Ring& ring, int n, const std::vector<GenDescriptor>& gens) {
  for (const auto& g : gens)
    if (g.value.ring_ptr() != ring.get() || g.value.n() != n)
      throw Error(ErrorCode::ring_mismatch, "generator lives in a different matrix space");
}

}  // namespace detail

/// Subgroup generated by `gens`; the empty list gives the trivial group.
inline GroupSet closure(const Ring& ring, int n, const std::vector<GenDescriptor>& gens,
                        std::string label = "<gens>", std::size_t cap = kDefaultMemberCap) {
  detail::require_space(ring, n, gens);
  detail::ClosureBuilder builder(ring, n, cap, std::move(label));
  for (const auto& g : detail::sorted_by_key(gens)) builder.add(g);
  return std::move(builder).finish();
}

/// Smallest subgroup containing `seed` and normalized by every element of
/// `ambient` (and their inverses).
inline GroupSet normal_closure(const Ring& ring, int n, const std::vector<GenDescriptor>& seed,
                               const std::vector<GenDescriptor>& ambient, std::string label = "<<seed>>",
                               std::size_t cap = kDefaultMemberCap) {
  detail::require_space(ring, n, seed);
  detail::require_space(ring, n, ambient);
  detail::ClosureBuilder builder(ring, n, cap, std::move(label));
  for (const auto& g : detail::sorted_by_key(seed)) builder.add(g);
  detail::close_under_conjugation(builder, ambient);
  return std::move(builder).finish();
}

inline GroupSet closure(const GroupSet& lazy_group, std::size_t cap = kDefaultMemberCap) {
  return closure(lazy_group.ring(), lazy_group.n(), lazy_group.generators(), lazy_group.label(), cap);
}

/// E_n(A, I), generated by the Suslin elements. With `cross_check` the
/// normal closure of E_n(I) in E_n(A) is computed as well and must agree.
inline GroupSet relative_elementary(const IdealSet& ideal, int n, std::size_t cap = kDefaultMemberCap,
                                    bool cross_check = false) {
  const Ring& ring = ideal.ring();
  GroupSet e = closure(ring, n, suslin_generators(ideal, n), "E(A," + render_members(ideal) + ")", cap);
  if (cross_check) {
    GroupSet nc = normal_closure(ring, n, elementary_generators(ideal, n), elementary_generators(unit_ideal(ring), n),
                                 "E(I)^E(A)", cap);
    if (nc.order() != e.order() ||
        !std::all_of(nc.keys().begin(), nc.keys().end(), [&](std::uint64_t k) { return e.contains_key(k); }))
      throw Error(ErrorCode::precondition, "Suslin closure disagrees with the normal closure of E_n(I)");
  }
  return e;
}

/// E_n(A).
inline GroupSet elementary_group(const Ring& ring, int n, std::size_t cap = kDefaultMemberCap) {
  return closure(ring, n, elementary_generators(unit_ideal(ring), n), "E(A)", cap);
}

/// GL_n(A, I) by enumerating identity + M over all I-matrices M. The member
/// list is fed back through the closure builder, which yields a short
/// generating set and proves the enumerated set is closed.
inline GroupSet congruence_members(const IdealSet& ideal, int n, std::size_t cap = kDefaultCongruenceCap) {
  detail::require_dim(n);
  const Ring& ring = ideal.ring();
  const RingTable* r = ring.get();
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::size_t candidates = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    candidates *= ideal.size();
    if (candidates > cap)
      throw CapExceeded("congruence enumeration |I|^(n^2) exceeds cap; use gl_generators closure", 0);
  }

  const std::string label = "GL(A," + render_members(ideal) + ")";
  const auto& m = ideal.members();
  std::vector<std::size_t> digit(cells, 0);
  std::unordered_set<std::uint64_t> found;
  detail::ClosureBuilder builder(ring, n, cap, label);
  for (std::size_t step = 0; step < candidates; ++step) {
    Mat x = Mat::identity(r, n);
    for (std::size_t c = 0; c < cells; ++c) {
      const int i = static_cast<int>(c) / n, j = static_cast<int>(c) % n;
      x.set(i, j, r->add(x(i, j), m[digit[c]]));
    }
    for (std::size_t c = cells; c-- > 0;) {
      if (++digit[c] < m.size()) break;
      digit[c] = 0;
    }
    if (!mat_is_invertible(x)) continue;
    found.insert(x.key());
    builder.add_if_new(
        x, [&] { return make_derived(x, mat_inverse(x), "g" + std::to_string(builder.generators().size())); });
  }
  GroupSet g = std::move(builder).finish();
  if (g.order() != found.size())
    throw Error(ErrorCode::precondition, "enumerated congruence set is not closed under multiplication");
  return g;
}

/// [H, K] as the normal closure, in <H, K>, of the commutators of generator
/// pairs. Neither group needs its members enumerated.
inline GroupSet commutator_subgroup(const GroupSet& h, const GroupSet& k, std::size_t cap = kDefaultMemberCap) {
  if (h.ring() != k.ring() || h.n() != k.n()) throw Error(ErrorCode::ring_mismatch, "groups in different spaces");
  const Ring& ring = h.ring();
  const int n = h.n();
  detail::ClosureBuilder builder(ring, n, cap, "[" + h.label() + "," + k.label() + "]");
  for (const auto& s : h.generators())
    for (const auto& t : k.generators()) {
      Mat st = mat_mul(s.value, t.value);
      Mat c = mat_mul(mat_mul(st, s.inverse), t.inverse);
      builder.add_if_new(c, [&] {
        return make_derived(c, mat_mul(mat_mul(mat_mul(t.value, s.value), t.inverse), s.inverse), "[s,t]");
      });
    }
  std::vector<GenDescriptor> ambient;
  std::unordered_set<std::uint64_t> seen;
  for (const auto* src : {&h.generators(), &k.generators()})
    for (const auto& g : *src)
      if (seen.insert(g.value.key()).second) ambient.push_back(g);
  detail::close_under_conjugation(builder, ambient);
  return std::move(builder).finish();
}

/// True when every member of `inner` lies in `outer`.
inline bool subgroup_contains(const GroupSet& outer, const GroupSet& inner) {
  if (inner.order() > outer.order()) return false;
  return std::all_of(inner.keys().begin(), inner.keys().end(), [&](std::uint64_t k) { return outer.contains_key(k); });
}

inline bool subgroup_equal(const GroupSet& h, const GroupSet& k) {
  return h.order() == k.order() && subgroup_contains(h, k);
}

/// Smallest-key element of the symmetric difference, if any.
inline std::optional<Mat> symmetric_difference_witness(const GroupSet& h, const GroupSet& k) {
  std::optional<std::uint64_t> best;
  auto scan = [&](const GroupSet& a, const GroupSet& b) {
    for (std::uint64_t key : a.keys())
      if (!b.contains_key(key) && (!best || key < *best)) best = key;
  };
  scan(h, k);
  scan(k, h);
  if (!best) return std::nullopt;
  return Mat::unpack(h.ring().get(), h.n(), *best);
}

/// Member whose g - 1 has an entry outside `ideal`, if any.
inline std::optional<Mat> outside_congruence(const GroupSet& g, const IdealSet& ideal) {
  for (std::size_t idx = 0; idx < g.order(); ++idx) {
    Mat m = g.member(idx);
    if (!congruent_to_identity(m, ideal)) return m;
  }
  return std::nullopt;
}

/// Closure spot check: all pairwise products when |G| <= 4096, otherwise
/// `samples` random pairs; every generator must be a member.
inline bool check_group_closure(const GroupSet& g, std::uint64_t seed = 7, std::size_t samples = 100000) {
  const RingTable* r = g.ring().get();
  if (!g.contains(Mat::identity(r, g.n()))) return false;
  for (const auto& gen : g.generators())
    if (!g.contains(gen.value) || !g.contains(gen.inverse)) return false;
  const std::size_t order = g.order();
  if (order <= 4096) {
    for (std::size_t a = 0; a < order; ++a) {
      Mat x = g.member(a);
      for (std::size_t b = 0; b < order; ++b)
        if (!g.contains(mat_mul(x, g.member(b)))) return false;
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, order - 1);
  for (std::size_t s = 0; s < samples; ++s)
    if (!g.contains(mat_mul(g.member(pick(rng)), g.member(pick(rng))))) return false;
  return true;
}

}  // namespace mcf
