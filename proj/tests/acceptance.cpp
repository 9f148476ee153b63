// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

using namespace mcf;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Ring ring(const char* text) { return build_ring(parse_ring_spec(text)); }
IdealSet ideal(const Ring& r, const char* text) { return parse_ideal_spec(text, r); }

void note(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

std::string orders(const VerdictRecord& v) {
  if (!v.lhs_order) return "-";
  return std::to_string(*v.lhs_order) + "/" + std::to_string(*v.rhs_order);
}

Outcome identities() {
  Outcome o;
  for (const char* t : {"Z/4", "Z/8", "Z/2[x]/(x^3)", "UT2(Z/2)"}) {
    LemmaCheck c = identity_suite(ring(t), 3, 10000, 2024);
    note(o, c.passed && c.cases >= 10000, std::string(t) + ": " + c.detail);
  }
  return o;
}

Outcome suslin() {
  Outcome o;
  const Ring z4 = ring("Z/4"), dual = ring("Z/2[x]/(x^2)"), ut2 = ring("UT2(Z/2)");
  for (const IdealSet& i : {ideal(z4, "(2)"), ideal(dual, "(x)"), ideal(ut2, "(E12)")}) {
    LemmaCheck c = suslin_equivalence(i, 3);
    note(o, c.passed, c.config + ": " + c.detail);
    if (o.ok) o.detail += (o.detail.empty() ? "" : ", ") + c.detail.substr(6);
  }
  return o;
}

Outcome chain() {
  Outcome o;
  const Ring z8 = ring("Z/8");
  const IdealSet two = ideal(z8, "(2)");
  HabdankOrders ord;
  LemmaCheck c = habdank_chain(two, two, 3, {}, &ord);
  note(o, c.passed, c.detail);
  note(o, ord.congruence == 512, "outer bound order " + std::to_string(ord.congruence));
  if (o.ok) o.detail = c.detail;
  return o;
}

Outcome gl_generators_check() {
  Outcome o;
  const Ring z4 = ring("Z/4"), z8 = ring("Z/8");
  const std::vector<std::pair<IdealSet, std::size_t>> cases{
      {ideal(z4, "(2)"), 512}, {ideal(z8, "(2)"), 262144}, {unit_ideal(z4), 86016}};
  for (const auto& [i, expected] : cases) {
    LemmaCheck c = gl_generator_validation(i, 3);
    note(o, c.passed && c.cases == expected, c.config + ": " + c.detail);
    if (o.ok) o.detail += (o.detail.empty() ? "" : ", ") + std::to_string(c.cases);
  }
  return o;
}

Outcome generalized() {
  Outcome o;
  const Ring z8 = ring("Z/8"), z4 = ring("Z/4"), ut2 = ring("UT2(Z/2)");
  Workbench w8(z8, 3), w4(z4, 3), wu(ut2, 3);
  VerdictRecord a = verify_generalized(w8, ideal(z8, "(2)"), ideal(z8, "(2)"));
  VerdictRecord b = verify_generalized(w4, ideal(z4, "(2)"), ideal(z4, "(2)"));
  VerdictRecord c = verify_generalized(wu, ideal(ut2, "(E12)"), ideal(ut2, "(E12)"));
  VerdictRecord d = verify_generalized(wu, ideal(ut2, "(E12)"), unit_ideal(ut2));
  note(o, a.status == Status::verified && a.equal && !a.degenerate, "Z/8 " + orders(a));
  note(o, b.status == Status::verified && b.equal && b.degenerate, "Z/4 not flagged degenerate");
  note(o, c.status == Status::verified && c.equal, "UT2 " + orders(c));
  note(o, d.status == Status::verified && d.equal && !d.degenerate, "UT2 with J=A " + orders(d));
  if (o.ok)
    o.detail = "Z/8 " + orders(a) + ", Z/4 degenerate, UT2 " + orders(c) + " (IJ+JI=0), UT2 with J=A " + orders(d);
  return o;
}

Outcome triple() {
  Outcome o;
  const Ring z16 = ring("Z/16"), z8 = ring("Z/8");
  Workbench w16(z16, 3), w8(z8, 3);
  const IdealSet two16 = ideal(z16, "(2)"), two8 = ideal(z8, "(2)");
  VerdictRecord a = verify_triple(w16, two16, two16, two16);
  VerdictRecord b = verify_triple(w8, two8, two8, two8);
  const SlotSpec slots{slot_of(two16, SlotKind::E), slot_of(two16, SlotKind::GL), slot_of(two16, SlotKind::GL)};
  const IdealSet bound = folded_ideal(standard_form(2), slots);
  note(o, bound == ideal(z16, "(8)"), "folded bound is " + render_members(bound));
  note(o, a.status == Status::verified && a.equal && !a.degenerate && a.within_bound, "Z/16 " + orders(a));
  note(o, b.status == Status::verified && b.equal && b.degenerate, "Z/8 not degenerate");
  if (o.ok) o.detail = "Z/16 " + orders(a) + " inside GL_3(A,(8)), Z/8 degenerate";
  return o;
}

Outcome arrangements() {
  Outcome o;
  const Ring z8 = ring("Z/8");
  const IdealSet two = ideal(z8, "(2)");
  Workbench wb(z8, 3);
  using K = SlotKind;
  const std::vector<std::vector<K>> single_e{{K::E, K::GL, K::GL}, {K::GL, K::E, K::GL}, {K::GL, K::GL, K::E}};
  auto recs = verify_arrangements(wb, {two, two, two}, enumerate_bracketings(2), single_e);
  note(o, recs.size() == 6, "expected 6 cases");
  for (const auto& r : recs) note(o, r.status == Status::verified && r.equal, r.tree + " " + r.formula);
  if (o.ok) o.detail = "6 of 6 equal (all degenerate over Z/8)";
  return o;
}

Outcome multiple() {
  Outcome o;
  const Ring z8 = ring("Z/8"), z32 = ring("Z/32");
  Workbench w8(z8, 3), w32(z32, 3);
  const IdealSet two8 = ideal(z8, "(2)"), two32 = ideal(z32, "(2)");
  VerdictRecord a = verify_multiple(w8, {two8, two8, two8, two8});
  VerdictRecord b = verify_multiple(w32, {two32, two32, two32, two32});
  note(o, a.status == Status::verified && a.equal && a.degenerate, "Z/8 m=3 " + orders(a));
  note(o, b.status == Status::not_verified, std::string("Z/32 m=3 status ") + to_string(b.status));
  if (o.ok) o.detail = "Z/8 degenerate equal; Z/32 " + std::string(to_string(b.status));
  return o;
}

Outcome rewriting() {
  Outcome o;
  std::size_t cases = 0;
  for (const char* t : {"Z/8", "UT2(Z/2)"})
    for (int n : {3, 4}) {
      const Ring r = ring(t);
      LemmaCheck c = comgenerator_exhaustive(unit_ideal(r), unit_ideal(r), n);
      note(o, c.passed, c.config + ": " + c.detail);
      cases += c.cases;
    }
  if (o.ok) o.detail = std::to_string(cases) + " decompositions";
  return o;
}

Outcome expansion() {
  Outcome o;
  const Ring z8 = ring("Z/8"), ut2 = ring("UT2(Z/2)"), cubic = ring("Z/2[x]/(x^3)");
  const std::vector<std::pair<IdealSet, IdealSet>> cases{{ideal(z8, "(2)"), ideal(z8, "(4)")},
                                                         {ideal(ut2, "(E12)"), unit_ideal(ut2)},
                                                         {ideal(cubic, "(x)"), ideal(cubic, "(x)")}};
  for (const auto& [i, j] : cases) {
    LemmaCheck c = expansion_suite(i, j, 3, 10000, 99);
    note(o, c.passed && c.cases >= 10000, c.config + ": " + c.detail);
  }
  if (o.ok) o.detail = "3 configs x 10000 pairs";
  return o;
}

Outcome commutator_oracle() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& family : oracle::zoo())
    for (const auto& h : family)
      for (const auto& k : family) {
        if (h.group.order() * k.group.order() > (std::size_t{1} << 22)) continue;
        GroupSet fast = commutator_subgroup(h.group, k.group);
        note(o, oracle::same_members(fast, oracle::pairwise_commutators(h.group, k.group)),
             "[" + h.name + "," + k.name + "]");
        ++pairs;
      }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome determinism() {
  Outcome o;
  RunConfig cfg;
  cfg.profile = "quick";
  cfg.seed = 7;
  const std::string first = to_json(run_verification(cfg)).dump(2);
  const std::string second = to_json(run_verification(cfg)).dump(2);
  note(o, first == second, "reports differ");
  if (o.ok) o.detail = std::to_string(first.size()) + " bytes identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"identity suite", identities},
      {"Suslin generator equivalence", suslin},
      {"IJ+JI containment chain", chain},
      {"gl_generators validation", gl_generators_check},
      {"generalized commutator formula", generalized},
      {"triple commutator formula", triple},
      {"arrangements m=2", arrangements},
      {"standard form m=3", multiple},
      {"commutator rewriting", rewriting},
      {"seven-term expansion", expansion},
      {"commutator_subgroup oracle", commutator_oracle},
      {"report determinism", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    detail::Stopwatch clock;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("%s %2zu %-32s %8.0f ms  %s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first, clock.ms(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
