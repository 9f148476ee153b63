#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mcf/error.hpp"

namespace mcf {

/// Full binary bracketing of the ordered slots 0..m. Leaves read left to
/// right give 0..m.
class BracketTree {
 public:
  static BracketTree leaf(int slot) {
    BracketTree t;
    t.slot_ = slot;
    t.lo_ = t.hi_ = slot;
    return t;
  }

  static BracketTree node(BracketTree left, BracketTree right) {
    if (left.hi_ + 1 != right.lo_) throw Error(ErrorCode::precondition, "bracket leaves must be consecutive");
    BracketTree t;
    t.lo_ = left.lo_;
    t.hi_ = right.hi_;
    t.left_ = std::make_shared<const BracketTree>(std::move(left));
    t.right_ = std::make_shared<const BracketTree>(std::move(right));
    return t;
  }

  bool is_leaf() const { return slot_ >= 0; }
  int slot() const { return slot_; }
  const BracketTree& left() const { return *left_; }
  const BracketTree& right() const { return *right_; }
  int first_leaf() const { return lo_; }
  int last_leaf() const { return hi_; }
  int leaf_count() const { return hi_ - lo_ + 1; }

  /// Nested-list notation, e.g. "[[0,1],2]".
  std::string render() const {
    if (is_leaf()) return std::to_string(slot_);
    return "[" + left_->render() + "," + right_->render() + "]";
  }

  bool operator==(const BracketTree& o) const { return render() == o.render(); }

 private:
  int slot_ = -1;
  int lo_ = 0, hi_ = 0;
  std::shared_ptr<const BracketTree> left_, right_;
};

namespace detail {
inline std::vector<BracketTree> bracketings(int lo, int hi) {
  if (lo == hi) return {BracketTree::leaf(lo)};
  std::vector<BracketTree> out;
  // split points from the right, so the left-nested comb comes first
  for (int split = hi - 1; split >= lo; --split)
    for (const auto& l : bracketings(lo, split))
      for (const auto& r : bracketings(split + 1, hi)) out.push_back(BracketTree::node(l, r));
  return out;
}
}  // namespace detail

inline constexpr int kMaxBracketSlots = 4;

/// All Catalan(m) bracketings of slots 0..m.
inline std::vector<BracketTree> enumerate_bracketings(int m) {
  if (m < 1 || m > kMaxBracketSlots) throw Error(ErrorCode::precondition, "bracketings need 1 <= m <= 4");
  return detail::bracketings(0, m);
}

/// Left-nested [[..[0,1],..],m].
inline BracketTree standard_form(int m) {
  if (m < 0) throw Error(ErrorCode::precondition, "standard form needs m >= 0");
  BracketTree t = BracketTree::leaf(0);
  for (int k = 1; k <= m; ++k) t = BracketTree::node(t, BracketTree::leaf(k));
  return t;
}

/// Parses nested-list notation; the leaves must read 0..m in order.
inline BracketTree parse_tree(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> BracketTree {
    throw Error(ErrorCode::parse_error, "tree at position " + std::to_string(pos) + ": " + why);
  };
  auto parse = [&](auto&& self) -> BracketTree {
    if (pos >= s.size()) return fail("unexpected end");
    if (s[pos] == '[') {
      ++pos;
      BracketTree l = self(self);
      if (pos >= s.size() || s[pos] != ',') return fail("expected ','");
      ++pos;
      BracketTree r = self(self);
      if (pos >= s.size() || s[pos] != ']') return fail("expected ']'");
      ++pos;
      if (l.last_leaf() + 1 != r.first_leaf()) return fail("leaves must appear in increasing order");
      return BracketTree::node(std::move(l), std::move(r));
    }
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (start == pos) return fail("expected slot index or '['");
    return BracketTree::leaf(std::stoi(s.substr(start, pos - start)));
  };
  BracketTree t = parse(parse);
  if (pos != s.size()) fail("trailing characters");
  if (t.first_leaf() != 0) fail("leaves must start at slot 0");
  return t;
}

}  // namespace mcf
