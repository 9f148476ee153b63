#pragma once

// Independent brute-force oracles and a small zoo of subgroups shared by the
// unit tests and the acceptance runner.

#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mcf/mcf.hpp"

namespace oracle {

using mcf::Mat;

// Plain BFS closure of a generating set, without coset tricks.
inline std::unordered_set<std::uint64_t> naive_closure(const mcf::RingTable* r, int n, const std::vector<Mat>& gens) {
  std::unordered_set<std::uint64_t> seen;
  std::deque<Mat> todo;
  const Mat one = Mat::identity(r, n);
  seen.insert(one.key());
  todo.push_back(one);
  while (!todo.empty()) {
    Mat x = todo.front();
    todo.pop_front();
    for (const Mat& g : gens) {
      Mat y = mcf::mat_mul(x, g);
      if (seen.insert(y.key()).second) todo.push_back(y);
    }
  }
  return seen;
}

// <[h,k] : h in H, k in K> from every member pair.
inline std::unordered_set<std::uint64_t> pairwise_commutators(const mcf::GroupSet& h, const mcf::GroupSet& k) {
  const mcf::RingTable* r = h.ring().get();
  const int n = h.n();
  auto with_inverses = [&](const mcf::GroupSet& g) {
    std::vector<std::pair<Mat, Mat>> out;
    for (std::uint64_t key : g.keys()) {
      Mat m = Mat::unpack(r, n, key);
      out.emplace_back(m, mcf::mat_inverse(m));
    }
    return out;
  };
  const auto hs = with_inverses(h);
  const auto ks = with_inverses(k);
  std::unordered_map<std::uint64_t, Mat> distinct;
  for (const auto& [x, xi] : hs)
    for (const auto& [y, yi] : ks) {
      Mat c = mcf::mat_mul(mcf::mat_mul(x, y), mcf::mat_mul(xi, yi));
      distinct.emplace(c.key(), c);
    }
  // keep only commutators not yet generated, so the BFS stays small
  std::vector<Mat> kept;
  std::unordered_set<std::uint64_t> current{Mat::identity(r, n).key()};
  for (auto& [key, m] : distinct) {
    if (current.count(key)) continue;
    kept.push_back(m);
    current = naive_closure(r, n, kept);
  }
  return current;
}

inline bool same_members(const mcf::GroupSet& g, const std::unordered_set<std::uint64_t>& s) {
  if (g.order() != s.size()) return false;
  for (std::uint64_t k : g.keys())
    if (!s.count(k)) return false;
  return true;
}

struct ZooEntry {
  std::string name;
  mcf::GroupSet group;
};

// Permutation matrices of S_3 inside GL_3 of any ring.
inline mcf::GroupSet permutation_group(const mcf::Ring& r) {
  Mat swap12 = Mat::zero(r.get(), 3), cycle = Mat::zero(r.get(), 3);
  swap12.set(0, 1, 1);
  swap12.set(1, 0, 1);
  swap12.set(2, 2, 1);
  cycle.set(0, 1, 1);
  cycle.set(1, 2, 1);
  cycle.set(2, 0, 1);
  return mcf::closure(r, 3,
                      {mcf::make_derived(swap12, swap12, "s12"), mcf::make_derived(cycle, mcf::mat_inverse(cycle), "c")},
                      "S3");
}

// Upper unitriangular matrices over the whole ring.
inline mcf::GroupSet unitriangular(const mcf::Ring& r) {
  std::vector<mcf::GenDescriptor> gens;
  for (int a = 0; a < r->order(); ++a)
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {1, 3}}) gens.push_back(mcf::make_elementary(r, 3, i, j, static_cast<mcf::Elem>(a)));
  return mcf::closure(r, 3, gens, "U3");
}

// Groups over one ring, all materialized, n = 3.
inline std::vector<ZooEntry> zoo_for(const std::string& ring_text, const std::vector<std::string>& ideal_texts) {
  const mcf::Ring r = mcf::build_ring(mcf::parse_ring_spec(ring_text));
  std::vector<ZooEntry> out;
  out.push_back({"S3", permutation_group(r)});
  out.push_back({"U3", unitriangular(r)});
  for (const auto& t : ideal_texts) {
    const mcf::IdealSet i = mcf::parse_ideal_spec(t, r);
    out.push_back({"E" + t, mcf::closure(r, 3, mcf::elementary_generators(i, 3), "E" + t)});
    out.push_back({"E(A," + t + ")", mcf::relative_elementary(i, 3)});
    if (mcf::Workbench(r, 3).congruence_bound(i) <= mcf::kDefaultCongruenceCap)
      out.push_back({"GL(A," + t + ")", mcf::congruence_members(i, 3)});
  }
  for (auto& e : out) e.name = ring_text + " " + e.name;
  return out;
}

inline std::vector<std::vector<ZooEntry>> zoo() {
  return {zoo_for("Z/2", {"(1)"}),
          zoo_for("Z/4", {"(2)", "(1)"}),
          zoo_for("Z/8", {"(4)"}),
          zoo_for("Z/2[x]/(x^2)", {"(x)"}),
          zoo_for("UT2(Z/2)", {"(E12)"})};
}

}  // namespace oracle
