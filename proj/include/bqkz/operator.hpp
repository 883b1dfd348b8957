#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bqkz/field.hpp"

namespace bqkz {

// Basis convention: a configuration of L sites is an integer whose bit for
// position p (0-based, p = 0 leftmost) is (idx >> (L - 1 - p)) & 1, with
// 0 = up and 1 = down. Physical site k (1-based) sits at position k - 1.

template <class F>
using StateVector = std::vector<F>;

/// Row-major 4x4 matrix on two sites, index 2*b_first + b_second.
template <class F>
using Mat4 = std::array<F, 16>;

/// Row-major 2x2 matrix on one site.
template <class F>
using Mat2 = std::array<F, 4>;

inline int bit_at(std::uint64_t idx, int nsites, int pos) {
  return static_cast<int>((idx >> (nsites - 1 - pos)) & 1U);
}

inline void require_position(int nsites, int pos, const char* what) {
  if (pos < 0 || pos >= nsites) throw std::out_of_range(std::string(what) + ": site index out of range");
}

/// Applies a two-site matrix acting on positions (p1, p2) in place.
template <class F>
void apply_pair(StateVector<F>& v, int nsites, int p1, int p2, const Mat4<F>& m) {
  require_position(nsites, p1, "apply_pair");
  require_position(nsites, p2, "apply_pair");
  if (p1 == p2) throw std::invalid_argument("apply_pair: positions coincide");
  const std::uint64_t m1 = 1ULL << (nsites - 1 - p1);
  const std::uint64_t m2 = 1ULL << (nsites - 1 - p2);
  const std::uint64_t dim = 1ULL << nsites;
  std::array<bool, 16> nz{};
  for (std::size_t k = 0; k < 16; ++k) nz[k] = !is_zero(m[k]);
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & (m1 | m2)) continue;
    const std::array<std::uint64_t, 4> id{base, base | m2, base | m1, base | m1 | m2};
    std::array<F, 4> in{v[id[0]], v[id[1]], v[id[2]], v[id[3]]};
    for (std::size_t r = 0; r < 4; ++r) {
      F acc(0);
      for (std::size_t c = 0; c < 4; ++c)
        if (nz[4 * r + c] && !is_zero(in[c])) acc += m[4 * r + c] * in[c];
      v[id[r]] = acc;
    }
  }
}

/// Applies a one-site matrix at position p in place.
template <class F>
void apply_single(StateVector<F>& v, int nsites, int p, const Mat2<F>& m) {
  require_position(nsites, p, "apply_single");
  const std::uint64_t mk = 1ULL << (nsites - 1 - p);
  const std::uint64_t dim = 1ULL << nsites;
  const bool diagonal = is_zero(m[1]) && is_zero(m[2]);
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & mk) continue;
    if (diagonal) {
      v[base] *= m[0];
      v[base | mk] *= m[3];
    } else {
      const F a = v[base];
      const F b = v[base | mk];
      v[base] = m[0] * a + m[1] * b;
      v[base | mk] = m[2] * a + m[3] * b;
    }
  }
}

/// Dense square matrix over an exact field.
template <class F>
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, F(0)) {}

  static OperatorMatrix identity(std::size_t dim) {
    OperatorMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = F(1);
    return m;
  }
  /// Matrix of a linear map, built column by column from basis vectors.
  static OperatorMatrix from_map(std::size_t dim, const std::function<StateVector<F>(const StateVector<F>&)>& f) {
    OperatorMatrix m(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      StateVector<F> e(dim, F(0));
      e[c] = F(1);
      const StateVector<F> col = f(e);
      for (std::size_t r = 0; r < dim; ++r) m(r, c) = col[r];
    }
    return m;
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  F& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  [[nodiscard]] StateVector<F> apply(const StateVector<F>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("OperatorMatrix::apply: dimension mismatch");
    StateVector<F> out(dim_, F(0));
    for (std::size_t r = 0; r < dim_; ++r) {
      F acc(0);
      for (std::size_t c = 0; c < dim_; ++c) {
        const F& x = a_[r * dim_ + c];
        if (!is_zero(x) && !is_zero(v[c])) acc += x * v[c];
      }
      out[r] = acc;
    }
    return out;
  }

  [[nodiscard]] bool is_zero_matrix() const {
    for (const F& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }
  [[nodiscard]] bool is_scalar(const F& lambda) const {
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        if (!((*this)(r, c) == (r == c ? lambda : F(0)))) return false;
    return true;
  }

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("OperatorMatrix product: dimension mismatch");
    OperatorMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const F& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < a.dim_; ++j)
          if (!is_zero(b(k, j))) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) {
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
  }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) {
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
    return a;
  }
  friend OperatorMatrix operator*(const F& s, OperatorMatrix a) {
    for (F& x : a.a_) x = s * x;
    return a;
  }
  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<F> a_;
};

template <class F>
Mat4<F> mat4_product(const Mat4<F>& a, const Mat4<F>& b) {
  Mat4<F> r;
  r.fill(F(0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j) r[4 * i + j] += a[4 * i + k] * b[4 * k + j];
  return r;
}

/// Embeds a two-site matrix as an operator on L sites acting on (p1, p2).
template <class F>
OperatorMatrix<F> embed_pair(int nsites, int p1, int p2, const Mat4<F>& m) {
  return OperatorMatrix<F>::from_map(std::size_t{1} << nsites, [&](const StateVector<F>& v) {
    StateVector<F> w = v;
    apply_pair(w, nsites, p1, p2, m);
    return w;
  });
}

template <class F>
OperatorMatrix<F> embed_single(int nsites, int p, const Mat2<F>& m) {
  return OperatorMatrix<F>::from_map(std::size_t{1} << nsites, [&](const StateVector<F>& v) {
    StateVector<F> w = v;
    apply_single(w, nsites, p, m);
    return w;
  });
}

// ---------------------------------------------------------------------------
// Local operators on N sites (site 1 = most significant bit).

inline int count_down(std::uint64_t idx) { return __builtin_popcountll(idx); }

/// Magnetisation (#up - #down)/2 as a diagonal operator.
template <class F>
OperatorMatrix<F> magnetisation(int n_sites) {
  const std::size_t dim = std::size_t{1} << n_sites;
  OperatorMatrix<F> m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    m(i, i) = from_rational<F>(Rational(n_sites - 2 * count_down(i), 2));
  return m;
}

/// Index of the basis state with every spin flipped.
inline std::uint64_t spin_reversed_index(std::uint64_t idx, int n_sites) {
  return (~idx) & ((1ULL << n_sites) - 1);
}

/// Index of the basis state with site order reversed.
inline std::uint64_t parity_index(std::uint64_t idx, int n_sites) {
  std::uint64_t r = 0;
  for (int p = 0; p < n_sites; ++p)
    if (bit_at(idx, n_sites, p)) r |= 1ULL << p;
  return r;
}

template <class F>
StateVector<F> apply_spin_reversal(const StateVector<F>& v, int n_sites) {
  StateVector<F> out(v.size(), F(0));
  for (std::uint64_t i = 0; i < v.size(); ++i) out[spin_reversed_index(i, n_sites)] = v[i];
  return out;
}

template <class F>
StateVector<F> apply_parity(const StateVector<F>& v, int n_sites) {
  StateVector<F> out(v.size(), F(0));
  for (std::uint64_t i = 0; i < v.size(); ++i) out[parity_index(i, n_sites)] = v[i];
  return out;
}

/// Index of the basis state obtained by inserting `spin` (0 up, 1 down) so that
/// it becomes site i of the (N+1)-site chain.
inline std::uint64_t insert_index(std::uint64_t idx, int n_sites, int site, int spin) {
  if (site < 1 || site > n_sites + 1) throw std::out_of_range("insertion: site index out of range");
  const int low_bits = n_sites - (site - 1);  // bits to the right of the new site
  const std::uint64_t low = idx & ((1ULL << low_bits) - 1);
  const std::uint64_t high = idx >> low_bits;
  return (((high << 1) | static_cast<std::uint64_t>(spin)) << low_bits) | low;
}

/// Theta_i^spin: maps an N-site vector into the (N+1)-site space.
template <class F>
StateVector<F> apply_insertion(const StateVector<F>& v, int n_sites, int site, int spin) {
  StateVector<F> out(std::size_t{1} << (n_sites + 1), F(0));
  for (std::uint64_t i = 0; i < v.size(); ++i) out[insert_index(i, n_sites, site, spin)] = v[i];
  return out;
}

// ---------------------------------------------------------------------------
// Magnetisation sectors and down-spin position tuples.

using Positions = std::vector<int>;

/// Basis index of the configuration whose down spins sit at `down` (1-based).
inline std::uint64_t index_of_down(const Positions& down, int n_sites) {
  std::uint64_t idx = 0;
  for (int a : down) {
    if (a < 1 || a > n_sites) throw std::out_of_range("position outside the chain");
    idx |= 1ULL << (n_sites - a);
  }
  return idx;
}

inline Positions down_of_index(std::uint64_t idx, int n_sites) {
  Positions out;
  for (int p = 0; p < n_sites; ++p)
    if (bit_at(idx, n_sites, p)) out.push_back(p + 1);
  return out;
}

/// Complement of a position set within 1..N.
inline Positions complement_positions(const Positions& a, int n_sites) {
  Positions out;
  std::size_t k = 0;
  for (int s = 1; s <= n_sites; ++s) {
    if (k < a.size() && a[k] == s)
      ++k;
    else
      out.push_back(s);
  }
  return out;
}

/// All increasing tuples of length k in 1..N, lexicographic order.
inline std::vector<Positions> increasing_tuples(int n_sites, int k) {
  std::vector<Positions> out;
  if (k < 0 || k > n_sites) return out;
  Positions cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n_sites - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

inline std::string positions_key(const Positions& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s;
}

/// Fixed-magnetisation basis: states with exactly n down spins.
class SectorBasis {
 public:
  SectorBasis(int n_sites, int n_down) : n_sites_(n_sites), n_down_(n_down) {
    tuples_ = increasing_tuples(n_sites, n_down);
    for (std::size_t k = 0; k < tuples_.size(); ++k) index_.emplace(index_of_down(tuples_[k], n_sites), k);
  }
  [[nodiscard]] int n_sites() const { return n_sites_; }
  [[nodiscard]] int n_down() const { return n_down_; }
  [[nodiscard]] std::size_t size() const { return tuples_.size(); }
  [[nodiscard]] const Positions& tuple(std::size_t k) const { return tuples_.at(k); }
  [[nodiscard]] const std::vector<Positions>& tuples() const { return tuples_; }
  [[nodiscard]] std::uint64_t state(std::size_t k) const { return index_of_down(tuples_.at(k), n_sites_); }
  /// Sector index of a full-space state; -1 if outside the sector.
  [[nodiscard]] long find_state(std::uint64_t idx) const {
    auto it = index_.find(idx);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
  }
  [[nodiscard]] long find(const Positions& a) const { return find_state(index_of_down(a, n_sites_)); }

 private:
  int n_sites_;
  int n_down_;
  std::vector<Positions> tuples_;
  std::map<std::uint64_t, std::size_t> index_;
};

}  // namespace bqkz
