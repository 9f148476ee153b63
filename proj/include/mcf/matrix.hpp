#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcf/ideal.hpp"
#include "mcf/ring.hpp"

namespace mcf {

inline constexpr int kMinDim = 1;
inline constexpr int kMaxDim = 4;

/// True when |A|^(n*n) distinct matrices fit into a 64-bit packing key.
inline bool key_fits(const RingTable& ring, int n) {
  const int cells = n * n;
  if (ring.radix_bits()) return ring.radix_bits() * cells <= 64;
  unsigned __int128 span = 1;
  for (int c = 0; c < cells; ++c) {
    span *= static_cast<unsigned>(ring.order());
    if (span > (static_cast<unsigned __int128>(1) << 64)) return false;
  }
  return true;
}

/// n x n matrix over a RingTable. Holds a non-owning pointer to the ring, so
/// the owning `Ring` must outlive every matrix built over it.
class Mat {
 public:
  Mat() = default;
  Mat(const RingTable* ring, int n) : ring_(ring), n_(static_cast<std::uint8_t>(n)) {
    if (n < kMinDim || n > kMaxDim) throw Error(ErrorCode::precondition, "matrix dimension must lie in [1, 4]");
  }

  static Mat zero(const RingTable* ring, int n) { return Mat(ring, n); }
  static Mat identity(const RingTable* ring, int n) {
    Mat m(ring, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  int n() const { return n_; }
  const RingTable& ring() const { return *ring_; }
  const RingTable* ring_ptr() const { return ring_; }

  Elem operator()(int i, int j) const { return e_[i * n_ + j]; }
  void set(int i, int j, Elem v) { e_[i * n_ + j] = v; }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  /// Mixed-radix row-major packing, entry (0,0) most significant.
  std::uint64_t key() const {
    std::uint64_t k = 0;
    const int cells = n_ * n_;
    if (const int bits = ring_->radix_bits()) {
      for (int c = 0; c < cells; ++c) k = (k << bits) | e_[c];
    } else {
      const auto radix = static_cast<std::uint64_t>(ring_->order());
      for (int c = 0; c < cells; ++c) k = k * radix + e_[c];
    }
    return k;
  }

  static Mat unpack(const RingTable* ring, int n, std::uint64_t key) {
    Mat m(ring, n);
    const int cells = n * n;
    if (const int bits = ring->radix_bits()) {
      const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
      for (int c = cells - 1; c >= 0; --c) {
        m.e_[c] = static_cast<Elem>(key & mask);
        key >>= bits;
      }
    } else {
      const auto radix = static_cast<std::uint64_t>(ring->order());
      for (int c = cells - 1; c >= 0; --c) {
        m.e_[c] = static_cast<Elem>(key % radix);
        key /= radix;
      }
    }
    return m;
  }

  bool operator==(const Mat& o) const { return ring_ == o.ring_ && n_ == o.n_ && e_ == o.e_; }

 private:
  const RingTable* ring_ = nullptr;
  std::uint8_t n_ = 0;
  std::array<Elem, kMaxDim * kMaxDim> e_{};
};

namespace detail {
inline void same_space(const Mat& x, const Mat& y) {
  if (x.ring_ptr() != y.ring_ptr()) throw Error(ErrorCode::ring_mismatch, "matrices over different rings");
  if (x.n() != y.n()) throw Error(ErrorCode::precondition, "matrix dimension mismatch");
}
}  // namespace detail

inline Mat mat_mul(const Mat& x, const Mat& y) {
  detail::same_space(x, y);
  const RingTable& r = x.ring();
  const int n = x.n();
  Mat out(x.ring_ptr(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem acc = 0;
      for (int k = 0; k < n; ++k) acc = r.add(acc, r.mul(x(i, k), y(k, j)));
      out.set(i, j, acc);
    }
  return out;
}

inline Mat mat_add(const Mat& x, const Mat& y) {
  detail::same_space(x, y);
  Mat out(x.ring_ptr(), x.n());
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j) out.set(i, j, x.ring().add(x(i, j), y(i, j)));
  return out;
}

inline Mat mat_sub(const Mat& x, const Mat& y) {
  detail::same_space(x, y);
  Mat out(x.ring_ptr(), x.n());
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j) out.set(i, j, x.ring().sub(x(i, j), y(i, j)));
  return out;
}

/// e_{i,j}(alpha) with 1-based indices.
inline Mat elementary(const Ring& ring, int n, int i, int j, Elem alpha) {
  if (i == j) throw Error(ErrorCode::index_constraint, "elementary matrix needs i != j");
  if (i < 1 || j < 1 || i > n || j > n) throw Error(ErrorCode::index_constraint, "elementary index out of range");
  if (alpha >= ring->order()) throw Error(ErrorCode::unknown_element, "element index out of range");
  Mat m = Mat::identity(ring.get(), n);
  m.set(i - 1, j - 1, alpha);
  return m;
}

/// Identity except for `u` at diagonal position (k,k), 1-based.
inline Mat diagonal_unit(const Ring& ring, int n, int k, Elem u) {
  Mat m = Mat::identity(ring.get(), n);
  m.set(k - 1, k - 1, u);
  return m;
}

namespace detail {

// Calls fn(v) for every column vector v in A^n; stops early when fn returns false.
template <typename Fn>
void for_each_vector(const RingTable& r, int n, Fn&& fn) {
  std::array<Elem, kMaxDim> v{};
  const int q = r.order();
  while (true) {
    if (!fn(v)) return;
    int pos = 0;
    while (pos < n) {
      if (++v[pos] < q) break;
      v[pos] = 0;
      ++pos;
    }
    if (pos == n) return;
  }
}

inline std::array<Elem, kMaxDim> apply(const Mat& x, const std::array<Elem, kMaxDim>& v) {
  const RingTable& r = x.ring();
  std::array<Elem, kMaxDim> out{};
  for (int i = 0; i < x.n(); ++i) {
    Elem acc = 0;
    for (int k = 0; k < x.n(); ++k) acc = r.add(acc, r.mul(x(i, k), v[k]));
    out[i] = acc;
  }
  return out;
}

}  // namespace detail

/// Kernel test: x is invertible iff v -> x v is injective on A^n. Finite
/// rings are Dedekind-finite, so a one-sided inverse is two-sided.
inline bool invertible_by_kernel(const Mat& x) {
  bool injective = true;
  detail::for_each_vector(x.ring(), x.n(), [&](const std::array<Elem, kMaxDim>& v) {
    bool nonzero = std::any_of(v.begin(), v.begin() + x.n(), [](Elem e) { return e != 0; });
    if (!nonzero) return true;
    auto w = detail::apply(x, v);
    if (std::all_of(w.begin(), w.begin() + x.n(), [](Elem e) { return e == 0; })) {
      injective = false;
      return false;
    }
    return true;
  });
  return injective;
}

/// Leibniz expansion; meaningful only over commutative rings.
inline Elem determinant(const Mat& x) {
  const RingTable& r = x.ring();
  if (!r.commutative()) throw Error(ErrorCode::precondition, "determinant requires a commutative ring");
  const int n = x.n();
  std::array<int, kMaxDim> perm{};
  for (int i = 0; i < n; ++i) perm[i] = i;
  Elem det = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Elem term = 1;
    for (int i = 0; i < n; ++i) term = r.mul(term, x(i, perm[i]));
    det = (inversions % 2) ? r.sub(det, term) : r.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return det;
}

inline bool invertible_by_determinant(const Mat& x) { return x.ring().is_unit(determinant(x)); }

inline bool mat_is_invertible(const Mat& x) {
  return x.ring().commutative() ? invertible_by_determinant(x) : invertible_by_kernel(x);
}

/// Column-wise solve of x X = 1 by enumerating A^n.
inline Mat mat_inverse(const Mat& x) {
  const int n = x.n();
  Mat inv(x.ring_ptr(), n);
  std::array<bool, kMaxDim> found{};
  int zero_hits = 0;
  detail::for_each_vector(x.ring(), n, [&](const std::array<Elem, kMaxDim>& v) {
    auto w = detail::apply(x, v);
    int ones = 0, pos = -1;
    bool other = false;
    for (int i = 0; i < n; ++i) {
      if (w[i] == 1) {
        ++ones;
        pos = i;
      } else if (w[i] != 0) {
        other = true;
      }
    }
    if (!other && ones == 0 && ++zero_hits > 1) return false;
    if (!other && ones == 1 && !found[pos]) {
      found[pos] = true;
      for (int i = 0; i < n; ++i) inv.set(i, pos, v[i]);
    }
    return true;
  });
  if (zero_hits > 1 || !std::all_of(found.begin(), found.begin() + n, [](bool b) { return b; }))
    throw Error(ErrorCode::not_invertible, "matrix is not invertible");
  return inv;
}

/// Rows separated by ";", entries by ",", canonical element names.
inline std::string render(const Mat& m) {
  std::string out;
  for (int i = 0; i < m.n(); ++i) {
    if (i) out += ";";
    for (int j = 0; j < m.n(); ++j) {
      if (j) out += ",";
      out += m.ring().name(m(i, j));
    }
  }
  return out;
}

/// Every entry of m - 1 lies in the ideal.
inline bool congruent_to_identity(const Mat& m, const IdealSet& ideal) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) {
      Elem d = (i == j) ? m.ring().sub(m(i, j), 1) : m(i, j);
      if (!ideal.contains(d)) return false;
    }
  return true;
}

/// Uniform over all n x n matrices; may be singular.
template <typename Rng>
Mat random_matrix(const Ring& ring, int n, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, ring->order() - 1);
  Mat m(ring.get(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, static_cast<Elem>(pick(rng)));
  return m;
}

/// Uniform over GL_n(A, I) by rejection: identity plus a random I-matrix.
template <typename Rng>
Mat random_congruence(const IdealSet& ideal, int n, Rng& rng) {
  const auto& members = ideal.members();
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  const RingTable* r = ideal.ring().get();
  for (;;) {
    Mat m = Mat::identity(r, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.set(i, j, r->add(m(i, j), members[pick(rng)]));
    if (mat_is_invertible(m)) return m;
  }
}

template <typename Rng>
Mat random_invertible(const Ring& ring, int n, Rng& rng) {
  return random_congruence(unit_ideal(ring), n, rng);
}

}  // namespace mcf
