#pragma once

// Run configuration, the fixed quick/flagship suites, JSON report and the
// process exit-code contract.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mcf/lemmas.hpp"
#include "mcf/parse.hpp"

namespace mcf {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_cap = 2, exit_config = 3 };

struct RunConfig {
  std::string ring = "Z/8";
  std::string ideals = "(2),(2)";
  int n = 3;
  std::string theorem = "generalized";  // standard|generalized|triple|multiple|arrangements|lemmas
  std::string tree;                     // arrangements only; empty means all bracketings
  std::string slots;                    // arrangements only; empty means every assignment with an E
  Caps caps;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;  // random triples / pairs in the lemma suites
  std::string profile;          // "", "quick" or "flagship"
  bool timing = false;          // elapsed times make reports run-dependent
};

inline const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names{"standard", "generalized",  "triple",
                                              "multiple", "arrangements", "lemmas"};
  return names;
}

struct Totals {
  std::size_t verified = 0, mismatched = 0, not_verified = 0, degenerate = 0;
  std::size_t lemmas_passed = 0, lemmas_failed = 0, lemmas_capped = 0;
};

struct VerifyReport {
  RunConfig config;
  std::vector<VerdictRecord> verdicts;
  std::vector<LemmaCheck> lemma_checks;

  Totals totals() const {
    Totals t;
    for (const auto& v : verdicts) {
      t.verified += v.status == Status::verified;
      t.mismatched += v.status == Status::mismatch;
      t.not_verified += v.status == Status::not_verified;
      t.degenerate += v.degenerate;
    }
    for (const auto& l : lemma_checks) {
      if (l.capped)
        ++t.lemmas_capped;
      else if (l.passed)
        ++t.lemmas_passed;
      else
        ++t.lemmas_failed;
    }
    return t;
  }

  int exit_code() const {
    const Totals t = totals();
    if (t.mismatched || t.lemmas_failed) return exit_mismatch;
    if (t.not_verified || t.lemmas_capped) return exit_cap;
    return exit_ok;
  }
};

namespace detail {

inline Ring ring_from_text(const std::string& text) { return build_ring(parse_ring_spec(text)); }

// Runs one lemma check; a cap stop is recorded instead of propagated.
inline void run_lemma(std::vector<LemmaCheck>& out, const std::string& name, const std::function<LemmaCheck()>& f) {
  try {
    out.push_back(f());
  } catch (const CapExceeded& e) {
    LemmaCheck c = start_check(name, "");
    c.capped = true;
    c.detail = std::string("not verified at this scale: ") + e.what();
    out.push_back(std::move(c));
  }
}

inline void append(std::vector<VerdictRecord>& out, std::vector<VerdictRecord> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

inline void lemma_suite(VerifyReport& rep, const Ring& ring, const std::vector<IdealSet>& ideals, int n) {
  const RunConfig& c = rep.config;
  auto& out = rep.lemma_checks;
  const IdealSet& i = ideals.at(0);
  const IdealSet& j = ideals.size() > 1 ? ideals[1] : ideals[0];
  run_lemma(out, "identities", [&] { return identity_suite(ring, n, c.samples, c.seed); });
  run_lemma(out, "suslin-generators", [&] { return suslin_equivalence(i, n, c.caps); });
  run_lemma(out, "ij-chain", [&] { return habdank_chain(i, j, n, c.caps); });
  run_lemma(out, "gl-generators", [&] { return gl_generator_validation(i, n, c.caps); });
  run_lemma(out, "rewriting", [&] { return comgenerator_exhaustive(i, j, n); });
  run_lemma(out, "expansion", [&] { return expansion_suite(i, j, n, c.samples, c.seed); });
}

// Rings of order at most 8, n = 3.
inline void quick_suite(VerifyReport& rep) {
  const RunConfig& c = rep.config;
  auto& lemmas = rep.lemma_checks;
  const Ring z4 = ring_from_text("Z/4");
  const Ring z8 = ring_from_text("Z/8");
  const Ring dual = ring_from_text("Z/2[x]/(x^2)");
  const Ring cubic = ring_from_text("Z/2[x]/(x^3)");
  const Ring ut2 = ring_from_text("UT2(Z/2)");
  const IdealSet z4_2 = parse_ideal_spec("(2)", z4);
  const IdealSet z8_2 = parse_ideal_spec("(2)", z8);
  const IdealSet dual_x = parse_ideal_spec("(x)", dual);
  const IdealSet ut2_e12 = parse_ideal_spec("(E12)", ut2);

  for (const Ring& r : {z4, z8, cubic, ut2})
    run_lemma(lemmas, "identities", [&] { return identity_suite(r, 3, c.samples, c.seed); });
  for (const IdealSet& i : {z4_2, dual_x, ut2_e12})
    run_lemma(lemmas, "suslin-generators", [&] { return suslin_equivalence(i, 3, c.caps); });
  run_lemma(lemmas, "ij-chain", [&] { return habdank_chain(z8_2, z8_2, 3, c.caps); });
  for (const IdealSet& i : {z4_2, z8_2, unit_ideal(z4)})
    run_lemma(lemmas, "gl-generators", [&] { return gl_generator_validation(i, 3, c.caps); });
  for (const Ring& r : {z8, ut2})
    for (int n : {3, 4})
      run_lemma(lemmas, "rewriting", [&] { return comgenerator_exhaustive(unit_ideal(r), unit_ideal(r), n); });
  run_lemma(lemmas, "expansion", [&] { return expansion_suite(z8_2, z8_2, 3, c.samples, c.seed); });
  run_lemma(lemmas, "expansion", [&] { return expansion_suite(ut2_e12, unit_ideal(ut2), 3, c.samples, c.seed); });

  Workbench wb4(z4, 3, c.caps), wb8(z8, 3, c.caps), wbd(dual, 3, c.caps), wbu(ut2, 3, c.caps);
  append(rep.verdicts, verify_standard(wb4, z4_2));
  append(rep.verdicts, verify_standard(wbd, dual_x));
  append(rep.verdicts, verify_standard(wb4, zero_ideal(z4)));
  rep.verdicts.push_back(verify_generalized(wb8, z8_2, z8_2));
  rep.verdicts.push_back(verify_generalized(wb4, z4_2, z4_2));
  rep.verdicts.push_back(verify_generalized(wbu, ut2_e12, ut2_e12));
  rep.verdicts.push_back(verify_generalized(wbu, ut2_e12, unit_ideal(ut2)));
  rep.verdicts.push_back(verify_triple(wb8, z8_2, z8_2, z8_2));
  append(rep.verdicts, verify_arrangements(wb8, {z8_2, z8_2, z8_2}));
  rep.verdicts.push_back(verify_multiple(wb8, {z8_2, z8_2, z8_2, z8_2}));
}

// Adds the Z/16 cases whose commutators are nontrivial at depth two.
inline void flagship_suite(VerifyReport& rep) {
  quick_suite(rep);
  const Ring z16 = ring_from_text("Z/16");
  const IdealSet two = parse_ideal_spec("(2)", z16);
  Workbench wb(z16, 3, rep.config.caps);
  rep.verdicts.push_back(verify_generalized(wb, two, two));
  rep.verdicts.push_back(verify_triple(wb, two, two, two));
  append(rep.verdicts, verify_arrangements(wb, {two, two, two}));
}

inline void single_run(VerifyReport& rep) {
  const RunConfig& c = rep.config;
  const Ring ring = ring_from_text(c.ring);
  const std::vector<IdealSet> ideals = parse_ideal_list(c.ideals, ring);
  auto need = [&](std::size_t k, bool exact) {
    if (exact ? ideals.size() != k : ideals.size() < k)
      throw Error(ErrorCode::invalid_spec, "theorem " + c.theorem + " needs " + (exact ? "" : "at least ") +
                                               std::to_string(k) + " ideals, got " + std::to_string(ideals.size()));
  };
  if (c.n < 3 || c.n > 4) throw Error(ErrorCode::invalid_spec, "n must be 3 or 4");
  if (c.theorem == "lemmas") {
    need(1, false);
    lemma_suite(rep, ring, ideals, c.n);
    return;
  }
  Workbench wb(ring, c.n, c.caps);
  if (c.theorem == "standard") {
    need(1, true);
    append(rep.verdicts, verify_standard(wb, ideals[0]));
  } else if (c.theorem == "generalized") {
    need(2, true);
    rep.verdicts.push_back(verify_generalized(wb, ideals[0], ideals[1]));
  } else if (c.theorem == "triple") {
    need(3, true);
    rep.verdicts.push_back(verify_triple(wb, ideals[0], ideals[1], ideals[2]));
  } else if (c.theorem == "multiple") {
    need(2, false);
    if (ideals.size() > kMaxBracketSlots + 1) throw Error(ErrorCode::invalid_spec, "at most five ideals");
    rep.verdicts.push_back(verify_multiple(wb, ideals));
  } else if (c.theorem == "arrangements") {
    need(2, false);
    if (ideals.size() > kMaxBracketSlots + 1) throw Error(ErrorCode::invalid_spec, "at most five ideals");
    std::vector<BracketTree> trees;
    if (!c.tree.empty()) {
      trees.push_back(parse_tree(c.tree));
      if (trees[0].leaf_count() != static_cast<int>(ideals.size()))
        throw Error(ErrorCode::invalid_spec, "tree has " + std::to_string(trees[0].leaf_count()) + " leaves but " +
                                                 std::to_string(ideals.size()) + " ideals were given");
    }
    std::vector<std::vector<SlotKind>> kinds;
    if (!c.slots.empty()) {
      kinds.push_back(parse_slots(c.slots));
      if (kinds[0].size() != ideals.size()) throw Error(ErrorCode::invalid_spec, "slot count does not match ideals");
      if (std::none_of(kinds[0].begin(), kinds[0].end(), [](SlotKind k) { return k == SlotKind::E; }))
        throw Error(ErrorCode::invalid_spec, "an arrangement needs at least one E slot");
    }
    append(rep.verdicts, verify_arrangements(wb, ideals, trees, kinds));
  } else {
    throw Error(ErrorCode::invalid_spec, "unknown theorem '" + c.theorem + "'");
  }
}

}  // namespace detail

/// Executes the configured run. Parse and configuration problems throw
/// mcf::Error; cap stops are recorded per case.
inline VerifyReport run_verification(const RunConfig& config) {
  VerifyReport rep{config, {}, {}};
  if (config.profile == "quick")
    detail::quick_suite(rep);
  else if (config.profile == "flagship")
    detail::flagship_suite(rep);
  else if (config.profile.empty())
    detail::single_run(rep);
  else
    throw Error(ErrorCode::invalid_spec, "unknown profile '" + config.profile + "'");
  return rep;
}

using Json = nlohmann::ordered_json;

inline Json to_json(const VerdictRecord& v, bool timing) {
  Json j;
  j["theorem"] = v.theorem;
  j["formula"] = v.formula;
  j["ring"] = v.ring;
  j["ideals"] = v.ideals;
  j["n"] = v.n;
  j["tree"] = v.tree;
  j["slots"] = v.slots;
  j["lhs_order"] = v.lhs_order ? Json(*v.lhs_order) : Json(nullptr);
  j["rhs_order"] = v.rhs_order ? Json(*v.rhs_order) : Json(nullptr);
  j["equal"] = v.equal;
  j["degenerate"] = v.degenerate;
  j["rhs_in_lhs"] = v.rhs_in_lhs;
  j["within_bound"] = v.within_bound;
  j["status"] = to_string(v.status);
  if (v.witness) j["witness"] = *v.witness;
  if (v.note) j["note"] = *v.note;
  if (timing) j["elapsed_ms"] = v.elapsed_ms;
  return j;
}

inline Json to_json(const LemmaCheck& l, bool timing) {
  Json j;
  j["name"] = l.name;
  j["config"] = l.config;
  j["passed"] = l.passed;
  j["capped"] = l.capped;
  j["cases"] = l.cases;
  j["detail"] = l.detail;
  if (timing) j["elapsed_ms"] = l.elapsed_ms;
  return j;
}

inline Json to_json(const RunConfig& c) {
  Json j;
  if (c.profile.empty()) {
    j["ring"] = render(parse_ring_spec(c.ring));
    Json ideals = Json::array();
    for (const auto& part : detail::split_top_level(c.ideals)) ideals.push_back(detail::strip(part));
    j["ideals"] = ideals;
    j["n"] = c.n;
    j["theorem"] = c.theorem;
    if (!c.tree.empty()) j["tree"] = parse_tree(c.tree).render();
    if (!c.slots.empty()) j["slots"] = render_slots(parse_slots(c.slots));
  } else {
    j["profile"] = c.profile;
  }
  j["cap_members"] = c.caps.members;
  j["cap_congruence"] = c.caps.congruence;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  return j;
}

inline Json to_json(const VerifyReport& rep) {
  const bool timing = rep.config.timing;
  Json j;
  j["config"] = to_json(rep.config);
  j["verdicts"] = Json::array();
  for (const auto& v : rep.verdicts) j["verdicts"].push_back(to_json(v, timing));
  j["lemma_checks"] = Json::array();
  for (const auto& l : rep.lemma_checks) j["lemma_checks"].push_back(to_json(l, timing));
  const Totals t = rep.totals();
  j["totals"] = {{"verdicts", rep.verdicts.size()},
                 {"verified", t.verified},
                 {"mismatch", t.mismatched},
                 {"not_verified", t.not_verified},
                 {"degenerate", t.degenerate},
                 {"lemma_checks", rep.lemma_checks.size()},
                 {"lemmas_passed", t.lemmas_passed},
                 {"lemmas_failed", t.lemmas_failed},
                 {"lemmas_capped", t.lemmas_capped},
                 {"exit_code", rep.exit_code()}};
  j["version"] = kVersion;
  return j;
}

}  // namespace mcf
