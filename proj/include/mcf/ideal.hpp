#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mcf/ring.hpp"

namespace mcf {

/// A two-sided ideal, stored as its sorted member list.
class IdealSet {
 public:
  IdealSet() = default;
  IdealSet(Ring ring, std::vector<Elem> sorted_members)
      : ring_(std::move(ring)), members_(std::move(sorted_members)), mask_(ring_->order(), 0) {
    for (Elem e : members_) mask_[e] = 1;
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem e) const { return mask_[e] != 0; }
  bool is_zero() const { return members_.size() == 1; }
  bool is_unit() const { return contains(1); }

  bool operator==(const IdealSet& other) const { return ring_ == other.ring_ && members_ == other.members_; }
  bool operator<(const IdealSet& other) const { return members_ < other.members_; }

  bool subset_of(const IdealSet& other) const {
    return std::all_of(members_.begin(), members_.end(), [&](Elem e) { return other.contains(e); });
  }

 private:
  Ring ring_;
  std::vector<Elem> members_;
  std::vector<char> mask_;
};

/// Smallest two-sided ideal containing `gens`, by fixed-point iteration over
/// additive closure and two-sided multiplication.
inline IdealSet ideal_generate(const Ring& ring, const std::vector<Elem>& gens) {
  const int q = ring->order();
  std::vector<char> in(q, 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  std::vector<Elem> work;
  auto push = [&](Elem e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
      work.push_back(e);
    }
  };
  for (Elem g : gens) {
    if (g >= q) throw Error(ErrorCode::unknown_element, "generator index out of range");
    push(g);
  }
  while (!work.empty()) {
    Elem x = work.back();
    work.pop_back();
    push(ring->neg(x));
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) push(ring->mul(ring->mul(static_cast<Elem>(a), x), static_cast<Elem>(b)));
    for (std::size_t i = 0; i < members.size(); ++i) push(ring->add(members[i], x));
  }
  std::sort(members.begin(), members.end());
  return IdealSet(ring, std::move(members));
}

inline IdealSet zero_ideal(const Ring& ring) { return IdealSet(ring, {0}); }

inline IdealSet unit_ideal(const Ring& ring) {
  std::vector<Elem> all(ring->order());
  for (int i = 0; i < ring->order(); ++i) all[i] = static_cast<Elem>(i);
  return IdealSet(ring, std::move(all));
}

namespace detail {
inline void same_ring(const IdealSet& i, const IdealSet& j) {
  if (i.ring() != j.ring()) throw Error(ErrorCode::ring_mismatch, "ideals live in different rings");
}
}  // namespace detail

inline IdealSet ideal_sum(const IdealSet& i, const IdealSet& j) {
  detail::same_ring(i, j);
  std::vector<Elem> gens = i.members();
  gens.insert(gens.end(), j.members().begin(), j.members().end());
  return ideal_generate(i.ring(), gens);
}

inline IdealSet ideal_product(const IdealSet& i, const IdealSet& j) {
  detail::same_ring(i, j);
  std::set<Elem> gens;
  for (Elem a : i.members())
    for (Elem b : j.members()) gens.insert(i.ring()->mul(a, b));
  return ideal_generate(i.ring(), std::vector<Elem>(gens.begin(), gens.end()));
}

/// IJ + JI.
inline IdealSet sym_product(const IdealSet& i, const IdealSet& j) {
  return ideal_sum(ideal_product(i, j), ideal_product(j, i));
}

inline bool is_ideal(const IdealSet& ideal) {
  const auto& r = *ideal.ring();
  if (!ideal.contains(0)) return false;
  for (Elem x : ideal.members()) {
    if (!ideal.contains(r.neg(x))) return false;
    for (Elem y : ideal.members())
      if (!ideal.contains(r.add(x, y))) return false;
    for (int a = 0; a < r.order(); ++a) {
      if (!ideal.contains(r.mul(static_cast<Elem>(a), x))) return false;
      if (!ideal.contains(r.mul(x, static_cast<Elem>(a)))) return false;
    }
  }
  return true;
}

inline constexpr int kIdealLatticeMaxOrder = 16;

/// Every two-sided ideal of a ring of order <= 16, sorted by member list.
/// Each ideal is a finite sum of principal ideals, so the lattice is the
/// closure of the principal ideals under ideal_sum.
inline std::vector<IdealSet> ideal_lattice(const Ring& ring) {
  if (ring->order() > kIdealLatticeMaxOrder)
    throw Error(ErrorCode::cap_exceeded, "ideal lattice enumeration is limited to order <= 16");
  std::vector<IdealSet> principal;
  std::set<std::vector<Elem>> seen;
  std::vector<IdealSet> all;
  for (int a = 0; a < ring->order(); ++a) {
    auto p = ideal_generate(ring, {static_cast<Elem>(a)});
    if (seen.insert(p.members()).second) {
      principal.push_back(p);
      all.push_back(p);
    }
  }
  for (std::size_t idx = 0; idx < all.size(); ++idx)
    for (const auto& p : principal) {
      auto s = ideal_sum(all[idx], p);
      if (seen.insert(s.members()).second) all.push_back(s);
    }
  std::sort(all.begin(), all.end());
  return all;
}

/// "[0,2,4,6]"-style member list using canonical element names.
inline std::string render_members(const IdealSet& ideal) {
  std::string out = "[";
  for (std::size_t i = 0; i < ideal.members().size(); ++i) {
    if (i) out += ",";
    out += ideal.ring()->name(ideal.members()[i]);
  }
  return out + "]";
}

}  // namespace mcf
