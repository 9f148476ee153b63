#pragma once

// Computational checks of the supporting lemmas: identity fuzzing, the
// Suslin-generator equivalence, the IJ+JI containment chain, validation of
// the GL generating set, exhaustive rewriting, and the seven-term expansion.

#include <random>
#include <string>
#include <vector>

#include "mcf/calculus.hpp"
#include "mcf/verifier.hpp"

namespace mcf {

struct LemmaCheck {
  std::string name;
  std::string config;
  bool passed = false;
  bool capped = false;  // stopped by a cap, neither passed nor refuted
  std::size_t cases = 0;
  std::string detail;
  double elapsed_ms = 0;
};

namespace detail {
inline LemmaCheck start_check(std::string name, std::string config) {
  LemmaCheck c;
  c.name = std::move(name);
  c.config = std::move(config);
  return c;
}

inline std::string ideal_label(const IdealSet& i) { return i.is_unit() ? "(1)" : render_members(i); }

inline std::string ideal_config(const IdealSet& i) { return i.ring()->spec_text() + " " + ideal_label(i); }

inline std::string pair_config(const IdealSet& i, const IdealSet& j, int n) {
  return ideal_config(i) + " " + ideal_label(j) + " n=" + std::to_string(n);
}
}  // namespace detail

/// Elementary relations over all (a, b) pairs (sampled when |A|^2 > samples),
/// then the group identities and product expansions on random triples.
inline LemmaCheck identity_suite(const Ring& ring, int n, std::size_t triples, std::uint64_t seed) {
  detail::Stopwatch clock;
  LemmaCheck out = detail::start_check("identities", ring->spec_text() + " n=" + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  const int q = ring->order();
  const std::size_t pair_target = 10000;
  if (static_cast<std::size_t>(q) * q <= pair_target) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        failures += !check_elementary_relations(ring, n, static_cast<Elem>(a), static_cast<Elem>(b)).all();
        ++out.cases;
      }
  } else {
    std::uniform_int_distribution<int> pick(0, q - 1);
    for (std::size_t s = 0; s < pair_target; ++s) {
      const auto a = static_cast<Elem>(pick(rng)), b = static_cast<Elem>(pick(rng));
      failures += !check_elementary_relations(ring, n, a, b).all();
      ++out.cases;
    }
  }
  std::uniform_int_distribution<int> len(1, 4);
  for (std::size_t t = 0; t < triples; ++t) {
    auto x = Invertible::of(random_invertible(ring, n, rng));
    auto y = Invertible::of(random_invertible(ring, n, rng));
    auto z = Invertible::of(random_invertible(ring, n, rng));
    failures += !check_group_identities(x, y, z).all();
    // product expansions reuse the triple as factors
    const std::vector<Invertible> pool{y, z, x * y, inv(z)};
    std::vector<Invertible> us(pool.begin(), pool.begin() + len(rng));
    failures += !check_product_expansions(x, us);
    ++out.cases;
  }
  out.passed = failures == 0;
  out.detail = std::to_string(failures) + " failures";
  out.elapsed_ms = clock.ms();
  return out;
}

/// closure(Suslin generators) = normal closure of E_n(I) in E_n(A).
inline LemmaCheck suslin_equivalence(const IdealSet& ideal, int n, const Caps& caps = {}) {
  detail::Stopwatch clock;
  LemmaCheck out = detail::start_check("suslin-generators", detail::ideal_config(ideal) + " n=" + std::to_string(n));
  const Ring& ring = ideal.ring();
  GroupSet suslin = closure(ring, n, suslin_generators(ideal, n), "suslin", caps.members);
  GroupSet nc = normal_closure(ring, n, elementary_generators(ideal, n), elementary_generators(unit_ideal(ring), n),
                               "normal-closure", caps.members);
  out.passed = subgroup_equal(suslin, nc);
  out.cases = suslin.order();
  out.detail = "order " + std::to_string(suslin.order()) + " vs " + std::to_string(nc.order());
  out.elapsed_ms = clock.ms();
  return out;
}

struct HabdankOrders {
  std::size_t relative_sym = 0;   // E(A, IJ+JI)
  std::size_t level = 0;          // [E(I), E(J)]
  std::size_t relative = 0;       // [E(A,I), E(A,J)]
  std::size_t congruence = 0;     // GL(A, IJ+JI), 0 when not enumerable
};

/// E(A,IJ+JI) <= [E(I),E(J)] <= [E(A,I),E(A,J)] <= GL(A,IJ+JI).
inline LemmaCheck habdank_chain(const IdealSet& i, const IdealSet& j, int n, const Caps& caps = {},
                                HabdankOrders* orders = nullptr) {
  detail::Stopwatch clock;
  LemmaCheck out = detail::start_check("ij-chain", detail::pair_config(i, j, n));
  const Ring& ring = i.ring();
  const IdealSet sym = sym_product(i, j);
  GroupSet e_sym = relative_elementary(sym, n, caps.members);
  GroupSet level = commutator_subgroup(GroupSet::lazy(ring, n, elementary_generators(i, n), "E(I)"),
                                       GroupSet::lazy(ring, n, elementary_generators(j, n), "E(J)"), caps.members);
  GroupSet rel = commutator_subgroup(GroupSet::lazy(ring, n, suslin_generators(i, n), "E(A,I)"),
                                     GroupSet::lazy(ring, n, suslin_generators(j, n), "E(A,J)"), caps.members);
  const bool first = subgroup_contains(level, e_sym);
  const bool second = subgroup_contains(rel, level);
  bool third = !outside_congruence(rel, sym);
  std::size_t gl_order = 0;
  Workbench wb(ring, n, caps);
  if (wb.congruence_bound(sym) <= caps.congruence) {
    GroupSet gl = congruence_members(sym, n, caps.congruence);
    gl_order = gl.order();
    third = third && subgroup_contains(gl, rel);
  }
  if (orders) *orders = {e_sym.order(), level.order(), rel.order(), gl_order};
  out.passed = first && second && third;
  out.cases = 4;
  out.detail = "orders " + std::to_string(e_sym.order()) + " <= " + std::to_string(level.order()) + " <= " +
               std::to_string(rel.order()) + " <= " + (gl_order ? std::to_string(gl_order) : std::string("bound"));
  out.elapsed_ms = clock.ms();
  return out;
}

/// closure(gl_generators) = congruence_members as sets.
inline LemmaCheck gl_generator_validation(const IdealSet& ideal, int n, const Caps& caps = {}) {
  detail::Stopwatch clock;
  LemmaCheck out = detail::start_check("gl-generators", detail::ideal_config(ideal) + " n=" + std::to_string(n));
  const Ring& ring = ideal.ring();
  GroupSet enumerated = congruence_members(ideal, n, caps.congruence);
  GroupSet generated = closure(ring, n, gl_generators(ideal, n), "gl-closure", caps.members);
  out.passed = subgroup_equal(enumerated, generated);
  out.cases = enumerated.order();
  out.detail = "closure " + std::to_string(generated.order()) + " vs enumeration " + std::to_string(enumerated.order());
  if (auto w = symmetric_difference_witness(enumerated, generated)) out.detail += ", witness " + render(*w);
  out.elapsed_ms = clock.ms();
  return out;
}

/// Every index pattern at dimension n, all alpha in I, beta in J, a in A.
inline LemmaCheck comgenerator_exhaustive(const IdealSet& i, const IdealSet& j, int n) {
  detail::Stopwatch clock;
  LemmaCheck out = detail::start_check("rewriting", detail::pair_config(i, j, n));
  const Ring& ring = i.ring();
  std::size_t failures = 0;
  for (int ip = 1; ip <= n; ++ip)
    for (int jp = 1; jp <= n; ++jp)
      for (int ii = 1; ii <= n; ++ii)
        for (int jj = 1; jj <= n; ++jj) {
          if (ip == jp || ii == jj) continue;
          for (Elem alpha : i.members())
            for (Elem beta : j.members())
              for (int a = 0; a < ring->order(); ++a) {
                try {
                  comgenerator_decompose(ring, n, {ip, jp, ii, jj}, alpha, static_cast<Elem>(a), beta, &i, &j);
                } catch (const Error&) {
                  ++failures;
                }
                ++out.cases;
              }
        }
  out.passed = failures == 0;
  out.detail = std::to_string(failures) + " failures";
  out.elapsed_ms = clock.ms();
  return out;
}

/// Seven-term expansion and IJ+JI membership on random e in GL(A,J), g in GL(A,I).
inline LemmaCheck expansion_suite(const IdealSet& i, const IdealSet& j, int n, std::size_t pairs,
                                  std::uint64_t seed) {
  detail::Stopwatch clock;
  LemmaCheck out = detail::start_check("expansion", detail::pair_config(i, j, n));
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t p = 0; p < pairs; ++p) {
    Mat g = random_congruence(i, n, rng);
    Mat e = random_congruence(j, n, rng);
    failures += !expansion_check(e, g, i, j).ok();
    ++out.cases;
  }
  out.passed = failures == 0;
  out.detail = std::to_string(failures) + " failures";
  out.elapsed_ms = clock.ms();
  return out;
}

}  // namespace mcf
