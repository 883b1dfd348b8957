#pragma once

#include <cstdint>
#include <vector>

#include "bqkz/operator.hpp"
#include "bqkz/report.hpp"

namespace bqkz {

/// Open XXZ chain couplings: anisotropy and the two boundary fields.
template <class F>
struct HamiltonianParams {
  int n_sites;
  F delta;
  F p;
  F pbar;
};

/// Delta = -1/2, p = (1/2 - x)/2, pbar = (1/2 - 1/x)/2.
HamiltonianParams<Rational> combinatorial_params(int n_sites, const Rational& x);

/// H v with H = -1/2 sum (sx sx + sy sy + Delta sz sz) + p sz_1 + pbar sz_N.
template <class F>
StateVector<F> hamiltonian_apply(const StateVector<F>& v, const HamiltonianParams<F>& h) {
  const int n = h.n_sites;
  const std::size_t dim = std::size_t{1} << n;
  if (v.size() != dim) throw std::invalid_argument("hamiltonian_apply: vector length mismatch");
  const F half_delta = h.delta / F(2);
  StateVector<F> out(dim, F(0));
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    if (is_zero(v[idx])) continue;
    auto spin = [&](int pos) { return bit_at(idx, n, pos) == 0 ? 1 : -1; };
    F diag(0);
    for (int k = 0; k + 1 < n; ++k) {
      if (spin(k) == spin(k + 1))
        diag -= half_delta;
      else
        diag += half_delta;
      if (spin(k) != spin(k + 1)) {
        const std::uint64_t flip = idx ^ (std::uint64_t{3} << (n - 2 - k));
        out[flip] -= v[idx];
      }
    }
    diag += spin(0) == 1 ? h.p : -h.p;
    diag += spin(n - 1) == 1 ? h.pbar : -h.pbar;
    out[idx] += diag * v[idx];
  }
  return out;
}

template <class F>
OperatorMatrix<F> hamiltonian(const HamiltonianParams<F>& h) {
  return OperatorMatrix<F>::from_map(std::size_t{1} << h.n_sites,
                                     [&](const StateVector<F>& v) { return hamiltonian_apply(v, h); });
}

/// Restriction to the sector with n_down down spins, in SectorBasis order.
OperatorMatrix<Rational> hamiltonian_sector(const HamiltonianParams<Rational>& h, int n_down);
std::vector<double> hamiltonian_sector_double(int n_sites, int n_down, double x);

/// E0 = -(3N - 1)/4 - (1 - x)^2 / (2x).
Rational ground_energy(int n_sites, const Rational& x);
double ground_energy(int n_sites, double x);

/// Exact (H - E0) psi_N(x) = 0 for 1 <= N <= n_max at each x.
Report check_eigenpair(int n_max, const std::vector<Rational>& xs);
/// Dense double eigensolve of the sector Hamiltonian; x < 0 is observed only.
Report check_numeric_ground(int n_max, const std::vector<double>& xs);
/// Exchange entries -1, commutation with magnetisation, lambda - H non-negative and irreducible.
Report check_hamiltonian_structure(int n_max, const std::vector<Rational>& xs);
/// T Psi = Lambda Psi over Q(zeta12): residue-built Psi up to n_inhom, homogeneous psi_N up to n_hom.
Report check_transfer_eigen(int n_inhom, int n_hom, std::uint64_t seed, int trials);
/// t(1)^{-1} t'(1) = -(4/[q]) (H - C) at q = zeta^4.
Report check_log_derivative(int n_max, std::uint64_t seed, int trials);

}  // namespace bqkz
