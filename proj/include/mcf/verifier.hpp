#pragma once

// Multi-commutator evaluation over slot assignments and the set-equality
// verdicts for the commutator formulas.

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcf/bracket.hpp"
#include "mcf/group.hpp"

namespace mcf {

enum class SlotKind { E, GL };

inline const char* to_string(SlotKind k) { return k == SlotKind::E ? "E" : "GL"; }

struct Slot {
  IdealSet ideal;
  SlotKind kind = SlotKind::E;
};

using SlotSpec = std::vector<Slot>;

struct Caps {
  std::size_t members = kDefaultMemberCap;
  std::size_t congruence = kDefaultCongruenceCap;
};

enum class Status { verified, mismatch, not_verified };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::mismatch: return "mismatch";
    case Status::not_verified: return "not verified at this scale";
  }
  return "?";
}

struct VerdictRecord {
  std::string theorem;
  std::string formula;
  std::string ring;
  std::vector<std::vector<std::string>> ideals;  // member names per slot
  int n = 0;
  std::string tree;
  std::vector<std::string> slots;
  std::optional<std::size_t> lhs_order, rhs_order;
  bool equal = false;
  bool degenerate = false;
  bool rhs_in_lhs = false;    // the all-E side is contained in the mixed side
  bool within_bound = false;  // both sides inside GL_n(A, folded ideal)
  Status status = Status::not_verified;
  std::optional<std::string> witness;
  std::optional<std::string> note;
  double elapsed_ms = 0;
};

/// The ideal bounding a bracket from above: leaves give I_k, nodes IJ + JI.
inline IdealSet folded_ideal(const BracketTree& tree, const SlotSpec& slots) {
  if (tree.is_leaf()) return slots.at(tree.slot()).ideal;
  return sym_product(folded_ideal(tree.left(), slots), folded_ideal(tree.right(), slots));
}

/// Caches slot groups and subtree commutators for one (ring, n).
class Workbench {
 public:
  Workbench(Ring ring, int n, Caps caps = {}) : ring_(std::move(ring)), n_(n), caps_(caps) {}

  const Ring& ring() const { return ring_; }
  int n() const { return n_; }
  const Caps& caps() const { return caps_; }

  /// Upper bound |I|^(n^2) on any subgroup of GL_n(A, I).
  std::size_t congruence_bound(const IdealSet& ideal) const {
    std::size_t b = 1;
    for (int c = 0; c < n_ * n_; ++c) {
      b *= ideal.size();
      if (b > caps_.members) return caps_.members + 1;
    }
    return b;
  }

  /// E slots carry Suslin generators; GL slots are enumerated when
  /// |I|^(n^2) fits the congruence cap, otherwise carried by gl_generators.
  const GroupSet& slot_group(const Slot& slot) {
    const std::string key = std::string(to_string(slot.kind)) + render_members(slot.ideal);
    auto it = slot_cache_.find(key);
    if (it != slot_cache_.end()) return it->second;
    GroupSet g;
    const std::string label = std::string(to_string(slot.kind)) + "(A," + render_members(slot.ideal) + ")";
    if (slot.kind == SlotKind::E) {
      g = GroupSet::lazy(ring_, n_, suslin_generators(slot.ideal, n_), label);
    } else if (congruence_bound(slot.ideal) <= caps_.congruence) {
      g = congruence_members(slot.ideal, n_, caps_.congruence);
    } else {
      g = GroupSet::lazy(ring_, n_, gl_generators(slot.ideal, n_), label);
    }
    g.set_label(label);
    return slot_cache_.emplace(key, std::move(g)).first->second;
  }

  /// Slot group with members enumerated (closure of its generators when lazy).
  const GroupSet& materialized_slot(const Slot& slot) {
    const GroupSet& g = slot_group(slot);
    if (g.materialized()) return g;
    const std::string key = "M" + std::string(to_string(slot.kind)) + render_members(slot.ideal);
    auto it = slot_cache_.find(key);
    if (it != slot_cache_.end()) return it->second;
    if (congruence_bound(slot.ideal) > caps_.members)
      throw CapExceeded("slot group " + g.label() + " may exceed the member cap", 0);
    return slot_cache_.emplace(key, closure(g, caps_.members)).first->second;
  }

  /// Leaf: the slot group. Node: commutator_subgroup of the two sides.
  /// Before any work, every node's bound |folded ideal|^(n^2) is compared
  /// against the member cap.
  const GroupSet& evaluate(const BracketTree& tree, const SlotSpec& slots) {
    check_scale(tree, slots);
    return eval(tree, slots, true);
  }

  void check_scale(const BracketTree& tree, const SlotSpec& slots) const {
    if (tree.is_leaf()) return;
    const IdealSet bound = folded_ideal(tree, slots);
    if (congruence_bound(bound) > caps_.members)
      throw CapExceeded("subtree " + tree.render() + " is bounded only by GL_n(A," + render_members(bound) +
                            "), beyond the member cap",
                        0);
    check_scale(tree.left(), slots);
    check_scale(tree.right(), slots);
  }

 private:
  const GroupSet& eval(const BracketTree& tree, const SlotSpec& slots, bool need_members) {
    if (tree.is_leaf()) {
      const Slot& s = slots.at(tree.slot());
      return need_members ? materialized_slot(s) : slot_group(s);
    }
    std::string key = tree.render() + "|";
    for (int k = tree.first_leaf(); k <= tree.last_leaf(); ++k)
      key += std::string(to_string(slots[k].kind)) + render_members(slots[k].ideal) + ";";
    auto it = tree_cache_.find(key);
    if (it != tree_cache_.end()) return it->second;
    const GroupSet& l = eval(tree.left(), slots, false);
    const GroupSet& r = eval(tree.right(), slots, false);
    GroupSet c = commutator_subgroup(l, r, caps_.members);
    return tree_cache_.emplace(key, std::move(c)).first->second;
  }

  Ring ring_;
  int n_;
  Caps caps_;
  std::map<std::string, GroupSet> slot_cache_;
  std::map<std::string, GroupSet> tree_cache_;
};

namespace detail {

inline std::vector<std::vector<std::string>> ideal_names(const SlotSpec& slots) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : slots) {
    std::vector<std::string> names;
    for (Elem e : s.ideal.members()) names.push_back(s.ideal.ring()->name(e));
    out.push_back(std::move(names));
  }
  return out;
}

inline std::string bracket_text(const BracketTree& tree, const SlotSpec& slots) {
  if (tree.is_leaf()) {
    const Slot& s = slots.at(tree.slot());
    return std::string(to_string(s.kind)) + "(I" + std::to_string(tree.slot()) + ")";
  }
  return "[" + bracket_text(tree.left(), slots) + "," + bracket_text(tree.right(), slots) + "]";
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline VerdictRecord base_record(const std::string& theorem, const Workbench& wb, const SlotSpec& slots,
                                 const std::string& tree) {
  VerdictRecord rec;
  rec.theorem = theorem;
  rec.ring = wb.ring()->spec_text();
  rec.ideals = ideal_names(slots);
  rec.n = wb.n();
  rec.tree = tree;
  for (const auto& s : slots) rec.slots.push_back(to_string(s.kind));
  return rec;
}

// Fills orders, equality, witness and status from two computed sides.
inline void settle(VerdictRecord& rec, const GroupSet& lhs, const GroupSet& rhs, const IdealSet& bound) {
  rec.lhs_order = lhs.order();
  rec.rhs_order = rhs.order();
  rec.rhs_in_lhs = subgroup_contains(lhs, rhs);
  rec.within_bound = !outside_congruence(lhs, bound) && !outside_congruence(rhs, bound);
  rec.equal = subgroup_equal(lhs, rhs);
  rec.degenerate = lhs.is_trivial() && rhs.is_trivial();
  if (auto w = symmetric_difference_witness(lhs, rhs)) rec.witness = render(*w);
  rec.status = (rec.equal && rec.rhs_in_lhs && rec.within_bound) ? Status::verified : Status::mismatch;
}

}  // namespace detail

inline SlotSpec all_elementary(SlotSpec slots) {
  for (auto& s : slots) s.kind = SlotKind::E;
  return slots;
}

/// Compares the tree evaluated on `slots` with the same tree on all-E slots.
inline VerdictRecord verify_tree(Workbench& wb, const std::string& theorem, const BracketTree& tree,
                                 const SlotSpec& slots) {
  if (static_cast<int>(slots.size()) != tree.leaf_count())
    throw Error(ErrorCode::precondition, "slot count does not match the bracket tree");
  detail::Stopwatch clock;
  const SlotSpec all_e = all_elementary(slots);
  VerdictRecord rec = detail::base_record(theorem, wb, slots, tree.render());
  rec.formula = detail::bracket_text(tree, slots) + " = " + detail::bracket_text(tree, all_e);
  try {
    wb.check_scale(tree, slots);
    const GroupSet& lhs = wb.evaluate(tree, slots);
    const GroupSet& rhs = wb.evaluate(tree, all_e);
    detail::settle(rec, lhs, rhs, folded_ideal(tree, slots));
  } catch (const CapExceeded& e) {
    rec.status = Status::not_verified;
    rec.note = e.what();
  }
  rec.elapsed_ms = clock.ms();
  return rec;
}

inline Slot slot_of(const IdealSet& ideal, SlotKind kind) { return Slot{ideal, kind}; }

/// [E(A,I), GL(A)] = E(A,I) and [E(A), GL(A,I)] = E(A,I).
inline std::vector<VerdictRecord> verify_standard(Workbench& wb, const IdealSet& ideal) {
  const IdealSet whole = unit_ideal(wb.ring());
  const BracketTree tree = BracketTree::node(BracketTree::leaf(0), BracketTree::leaf(1));
  std::vector<VerdictRecord> out;
  const std::vector<std::pair<SlotSpec, std::string>> cases = {
      {{slot_of(ideal, SlotKind::E), slot_of(whole, SlotKind::GL)}, "[E(A,I),GL(A)] = E(A,I)"},
      {{slot_of(whole, SlotKind::E), slot_of(ideal, SlotKind::GL)}, "[E(A),GL(A,I)] = E(A,I)"},
  };
  for (const auto& [slots, formula] : cases) {
    detail::Stopwatch clock;
    VerdictRecord rec = detail::base_record("standard", wb, slots, tree.render());
    rec.formula = formula;
    try {
      wb.check_scale(tree, slots);
      const GroupSet& lhs = wb.evaluate(tree, slots);
      const GroupSet& rhs = wb.materialized_slot(slot_of(ideal, SlotKind::E));
      detail::settle(rec, lhs, rhs, ideal);
    } catch (const CapExceeded& e) {
      rec.status = Status::not_verified;
      rec.note = e.what();
    }
    rec.elapsed_ms = clock.ms();
    out.push_back(std::move(rec));
  }
  return out;
}

/// [E(A,I), GL(A,J)] = [E(A,I), E(A,J)].
inline VerdictRecord verify_generalized(Workbench& wb, const IdealSet& i, const IdealSet& j) {
  return verify_tree(wb, "generalized", standard_form(1), {slot_of(i, SlotKind::E), slot_of(j, SlotKind::GL)});
}

/// [[E(A,I), GL(A,J)], GL(A,K)] = [[E(A,I), E(A,J)], E(A,K)].
inline VerdictRecord verify_triple(Workbench& wb, const IdealSet& i, const IdealSet& j, const IdealSet& k) {
  return verify_tree(wb, "triple", standard_form(2),
                     {slot_of(i, SlotKind::E), slot_of(j, SlotKind::GL), slot_of(k, SlotKind::GL)});
}

/// Standard form [E(A,I_0), GL(A,I_1), ..., GL(A,I_m)] against all-E.
inline VerdictRecord verify_multiple(Workbench& wb, const std::vector<IdealSet>& ideals) {
  if (ideals.size() < 2) throw Error(ErrorCode::precondition, "multiple formula needs at least two ideals");
  SlotSpec slots;
  for (std::size_t k = 0; k < ideals.size(); ++k)
    slots.push_back(slot_of(ideals[k], k == 0 ? SlotKind::E : SlotKind::GL));
  return verify_tree(wb, "multiple", standard_form(static_cast<int>(ideals.size()) - 1), slots);
}

/// Every E/GL assignment over m+1 slots with at least one E, in binary
/// order (slot 0 most significant, E before GL).
inline std::vector<std::vector<SlotKind>> assignments_with_elementary(int slots) {
  std::vector<std::vector<SlotKind>> out;
  for (int mask = 0; mask < (1 << slots); ++mask) {
    std::vector<SlotKind> kinds(slots);
    bool has_e = false;
    for (int k = 0; k < slots; ++k) {
      kinds[k] = (mask >> (slots - 1 - k)) & 1 ? SlotKind::GL : SlotKind::E;
      has_e = has_e || kinds[k] == SlotKind::E;
    }
    if (has_e) out.push_back(std::move(kinds));
  }
  return out;
}

/// For each tree and each assignment, compares against the all-E value of
/// the same tree. Empty `trees` means all bracketings; empty `assignments`
/// means every assignment containing an E slot.
inline std::vector<VerdictRecord> verify_arrangements(Workbench& wb, const std::vector<IdealSet>& ideals,
                                                      std::vector<BracketTree> trees = {},
                                                      std::vector<std::vector<SlotKind>> assignments = {}) {
  const int m = static_cast<int>(ideals.size()) - 1;
  if (m < 1) throw Error(ErrorCode::precondition, "arrangements need at least two ideals");
  if (trees.empty()) trees = enumerate_bracketings(m);
  if (assignments.empty()) assignments = assignments_with_elementary(m + 1);
  std::vector<VerdictRecord> out;
  for (const auto& tree : trees)
    for (const auto& kinds : assignments) {
      if (static_cast<int>(kinds.size()) != m + 1)
        throw Error(ErrorCode::precondition, "slot kinds do not match ideals");
      if (std::none_of(kinds.begin(), kinds.end(), [](SlotKind k) { return k == SlotKind::E; }))
        throw Error(ErrorCode::precondition, "an arrangement needs at least one E slot");
      SlotSpec slots;
      for (int k = 0; k <= m; ++k) slots.push_back(slot_of(ideals[k], kinds[k]));
      out.push_back(verify_tree(wb, "arrangements", tree, slots));
    }
  return out;
}

}  // namespace mcf
