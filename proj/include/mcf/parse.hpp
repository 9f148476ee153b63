#pragma once

// Text front end for ring and ideal specifications.
//
//   ring := atom ("x" atom)*
//   atom := "Z/" int ["[x]/(" poly ")"] | "F_" prime ["[x]/(" poly ")"]
//         | "UT" int "(" ring ")" | "M" int "(" ring ")" | "(" ring ")"
//   poly := term (("+" | "-") term)*,  term := int | [int] "x" ["^" int]
//
// Whitespace is ignored everywhere. Render of the parsed spec is the
// canonical text.

#include <string>
#include <string_view>
#include <vector>

#include "mcf/ideal.hpp"
#include "mcf/ring.hpp"
#include "mcf/verifier.hpp"

namespace mcf {

namespace detail {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) {
    for (char c : text)
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s_.push_back(c);
  }

  RingSpec parse() {
    if (s_.empty()) fail("empty ring specification");
    RingSpec r = ring();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    validate(r);
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::parse_error, "ring spec at position " + std::to_string(pos_) + ": " + why);
  }

  bool peek(std::string_view tok) const { return s_.compare(pos_, tok.size(), tok) == 0; }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  bool at_digit() const { return pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9'; }

  int integer() {
    if (!at_digit()) fail("expected integer");
    long v = 0;
    while (at_digit()) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000) fail("integer too large");
    }
    return static_cast<int>(v);
  }

  RingSpec ring() {
    std::vector<RingSpec> factors{atom()};
    while (accept("x")) factors.push_back(atom());
    if (factors.size() == 1) return std::move(factors[0]);
    return RingSpec::product_ring(std::move(factors));
  }

  RingSpec atom() {
    if (accept("Z/")) {
      const std::size_t at = pos_;
      int m = integer();
      if (m < 2) {
        pos_ = at;
        fail("modulus must be at least 2");
      }
      return maybe_quotient(m);
    }
    if (accept("F_")) {
      const std::size_t at = pos_;
      int p = integer();
      if (!is_prime(p)) {
        pos_ = at;
        fail("F_p needs a prime p");
      }
      return maybe_quotient(p);
    }
    if (accept("UT")) {
      int k = integer();
      expect("(");
      RingSpec base = ring();
      expect(")");
      return RingSpec::triangular_ring(k, std::move(base));
    }
    if (accept("M")) {
      int k = integer();
      expect("(");
      RingSpec base = ring();
      expect(")");
      return RingSpec::matrix_ring(k, std::move(base));
    }
    if (accept("(")) {
      RingSpec inner = ring();
      expect(")");
      return inner;
    }
    fail("expected Z/, F_, UT, M or '('");
  }

  RingSpec maybe_quotient(int m) {
    if (!accept("[x]/(")) return RingSpec::modular_ring(m);
    std::vector<long> coeffs;
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept("-")) {
        sign = -1;
      } else if (!first) {
        if (!accept("+")) break;
      }
      first = false;
      long c = 1;
      int power = 0;
      if (at_digit()) {
        c = integer();
        if (accept("x")) power = accept("^") ? integer() : 1;
      } else if (accept("x")) {
        power = accept("^") ? integer() : 1;
      } else {
        fail("expected polynomial term");
      }
      if (power > 16) fail("polynomial degree too large");
      if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(power + 1, 0);
      coeffs[power] += sign * c;
    }
    expect(")");
    std::vector<int> poly;
    for (long c : coeffs) poly.push_back(static_cast<int>(((c % m) + m) % m));
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    if (poly.size() < 2) fail("quotient polynomial must have degree >= 1");
    if (poly.back() != 1) fail("quotient polynomial must be monic");
    return RingSpec::poly_ring(m, std::move(poly));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

// Splits on commas outside any bracket pair.
inline std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw Error(ErrorCode::parse_error, "unbalanced brackets in '" + std::string(text) + "'");
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(c);
  }
  if (depth != 0) throw Error(ErrorCode::parse_error, "unbalanced brackets in '" + std::string(text) + "'");
  out.push_back(cur);
  return out;
}

inline std::string strip(std::string_view text) {
  std::string out;
  for (char c : text)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

}  // namespace detail

inline RingSpec parse_ring_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

/// "(g1, g2, ...)" with generators named as the ring names its elements.
inline IdealSet parse_ideal_spec(std::string_view text, const Ring& ring) {
  const std::string s = detail::strip(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw Error(ErrorCode::parse_error, "ideal spec must look like (g1,g2,...): '" + std::string(text) + "'");
  std::vector<Elem> gens;
  for (const auto& name : detail::split_top_level(std::string_view(s).substr(1, s.size() - 2))) {
    auto e = ring->find(name);
    if (!e) throw Error(ErrorCode::unknown_element, "no element named '" + name + "' in " + ring->spec_text());
    gens.push_back(*e);
  }
  return ideal_generate(ring, gens);
}

/// "(2),(2),(x)" -> one ideal per top-level group.
inline std::vector<IdealSet> parse_ideal_list(std::string_view text, const Ring& ring) {
  std::vector<IdealSet> out;
  for (const auto& part : detail::split_top_level(text)) out.push_back(parse_ideal_spec(part, ring));
  return out;
}

/// "E,GL,GL"
inline std::vector<SlotKind> parse_slots(std::string_view text) {
  std::vector<SlotKind> out;
  for (const auto& part : detail::split_top_level(text)) {
    const std::string k = detail::strip(part);
    if (k == "E")
      out.push_back(SlotKind::E);
    else if (k == "GL")
      out.push_back(SlotKind::GL);
    else
      throw Error(ErrorCode::parse_error, "slot kind must be E or GL, got '" + k + "'");
  }
  return out;
}

inline std::string render_slots(const std::vector<SlotKind>& kinds) {
  std::string out;
  for (std::size_t k = 0; k < kinds.size(); ++k) out += (k ? "," : "") + std::string(to_string(kinds[k]));
  return out;
}

}  // namespace mcf
