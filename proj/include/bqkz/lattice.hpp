#pragma once

#include <functional>
#include <vector>

#include "bqkz/operator.hpp"

namespace bqkz {

/// Model parameters entering transfer matrices and scattering operators.
/// The K-matrices only involve squares, so B = beta^2 and Bbar = betabar^2.
template <class F>
struct BoundaryParams {
  F q;
  F s;
  F B;
  F Bbar;
};

template <class F>
struct RWeights {
  F a, b, c;
};

template <class F>
RWeights<F> r_weights(const F& z, const F& q) {
  const F den = bracket(q / z);
  if (is_zero(den)) throw DomainError("singular point: [q/z] vanishes in the R-matrix");
  return {bracket(q * z) / den, bracket(z) / den, bracket(q) / den};
}

template <class F>
Mat4<F> r_matrix(const F& z, const F& q) {
  const auto w = r_weights(z, q);
  const F o(0);
  return {w.a, o, o, o, o, w.b, w.c, o, o, w.c, w.b, o, o, o, o, w.a};
}

/// Rcheck = P R.
template <class F>
Mat4<F> rcheck_matrix(const F& z, const F& q) {
  const auto w = r_weights(z, q);
  const F o(0);
  return {w.a, o, o, o, o, w.c, w.b, o, o, w.b, w.c, o, o, o, o, w.a};
}

/// Lower diagonal entry of K(z; b) from squares: (b^2 z^2 - 1) / (b^2 - z^2).
template <class F>
F k_entry_sq(const F& z2, const F& b2) {
  return checked_div(b2 * z2 - F(1), b2 - z2, "[b/z] in the K-matrix");
}

template <class F>
Mat2<F> k_matrix_sq(const F& z2, const F& b2) {
  return {F(1), F(0), F(0), k_entry_sq(z2, b2)};
}

/// K(z; b) = diag(1, [bz]/[b/z]).
template <class F>
Mat2<F> k_matrix(const F& z, const F& b) {
  return {F(1), F(0), F(0), checked_div(bracket(b * z), bracket(b / z), "[b/z] in the K-matrix")};
}

/// delta f(z, w) = ([qw/z] f(w, z) - [q] f(z, w)) / [z/w].
template <class F>
F divided_difference(const std::function<F(const F&, const F&)>& f, const F& z, const F& w, const F& q) {
  if (z == w || z == -w) throw DomainError("divided difference: z = +-w");
  return (bracket(q * w / z) * f(w, z) - bracket(q) * f(z, w)) / bracket(z / w);
}

/// T(z | z_1..z_N) applied to an N-site vector.
template <class F>
StateVector<F> transfer_apply(const StateVector<F>& v, const F& z, const std::vector<F>& zs, const BoundaryParams<F>& p) {
  const int n = static_cast<int>(zs.size());
  const int L = n + 1;
  const std::size_t half = std::size_t{1} << n;
  if (v.size() != half) throw std::invalid_argument("transfer_apply: vector length mismatch");
  const Mat2<F> k_left = k_matrix_sq(z * z, p.B);
  const F kbar = k_entry_sq(p.q * p.q * z * z, p.Bbar);
  std::vector<Mat4<F>> r_plus, r_minus;
  for (int i = 0; i < n; ++i) {
    r_plus.push_back(r_matrix(z * zs[static_cast<std::size_t>(i)], p.q));
    r_minus.push_back(r_matrix(z / zs[static_cast<std::size_t>(i)], p.q));
  }
  StateVector<F> out(half, F(0));
  for (int aux = 0; aux < 2; ++aux) {
    StateVector<F> w(2 * half, F(0));
    for (std::size_t k = 0; k < half; ++k) w[aux * half + k] = v[k];
    for (int i = n; i >= 1; --i) apply_pair(w, L, 0, i, r_plus[static_cast<std::size_t>(i - 1)]);
    apply_single(w, L, 0, k_left);
    for (int i = 1; i <= n; ++i) apply_pair(w, L, 0, i, r_minus[static_cast<std::size_t>(i - 1)]);
    const F weight = aux == 0 ? F(1) : kbar;
    for (std::size_t k = 0; k < half; ++k) out[k] += weight * w[aux * half + k];
  }
  return out;
}

template <class F>
OperatorMatrix<F> transfer_matrix(const F& z, const std::vector<F>& zs, const BoundaryParams<F>& p) {
  return OperatorMatrix<F>::from_map(std::size_t{1} << zs.size(),
                                     [&](const StateVector<F>& v) { return transfer_apply(v, z, zs, p); });
}

/// Scattering operator S^(i) (1-based i) applied to an N-site vector.
template <class F>
StateVector<F> scattering_apply(StateVector<F> v, int i, const std::vector<F>& zs, const BoundaryParams<F>& p) {
  const int n = static_cast<int>(zs.size());
  if (i < 1 || i > n) throw std::out_of_range("scattering operator: site index out of range");
  if (v.size() != (std::size_t{1} << n)) throw std::invalid_argument("scattering_apply: vector length mismatch");
  auto zz = [&](int k) -> const F& { return zs[static_cast<std::size_t>(k - 1)]; };
  const F zi = zz(i);
  const F s2 = p.s * p.s;
  // Positions are 0-based: Rcheck_{j,j+1} acts on (j-1, j).
  for (int j = i; j <= n - 1; ++j) apply_pair(v, n, j - 1, j, rcheck_matrix(zi / zz(j + 1), p.q));
  apply_single(v, n, n - 1, k_matrix_sq(s2 * zi * zi, s2 * p.Bbar));
  for (int j = n - 1; j >= i; --j) apply_pair(v, n, j - 1, j, rcheck_matrix(s2 * zi * zz(j + 1), p.q));
  for (int j = i - 1; j >= 1; --j) apply_pair(v, n, j - 1, j, rcheck_matrix(s2 * zi * zz(j), p.q));
  apply_single(v, n, 0, k_matrix_sq(s2 * s2 * zi * zi, p.B));
  for (int j = 1; j <= i - 1; ++j) apply_pair(v, n, j - 1, j, rcheck_matrix(s2 * zi / zz(j), p.q));
  return v;
}

template <class F>
OperatorMatrix<F> scattering_operator(int i, const std::vector<F>& zs, const BoundaryParams<F>& p) {
  return OperatorMatrix<F>::from_map(std::size_t{1} << zs.size(),
                                     [&](const StateVector<F>& v) { return scattering_apply(v, i, zs, p); });
}

}  // namespace bqkz
