#pragma once

#include <cstdint>
#include <vector>

#include "bqkz/homogeneous.hpp"
#include "bqkz/mpoly.hpp"
#include "bqkz/report.hpp"

namespace bqkz {

using PolyMatrix = std::vector<std::vector<MPoly>>;

/// Division-free determinant by expansion over column subsets, O(2^n n) products.
MPoly determinant(const PolyMatrix& m);
/// Permutation-sum determinant; reference for small n.
MPoly determinant_leibniz(const PolyMatrix& m);

/// f^k_{i,j} as a polynomial in tau.
MPoly f_poly(int i, int j, int k);

enum class DetMode { TauOne, TauGeneral };

/// Entry matrix of the scalar-product determinant F_N(x, alpha).
PolyMatrix scalar_product_matrix(int n_sites, DetMode mode);
MPoly scalar_product_det(int n_sites, DetMode mode);
/// F_N through the alternating-spin covector sum over epsilon in {0,1}^n.
MPoly scalar_product_eps_sum(const ComponentTable& t, const MPoly& alpha);

/// Alternating component (down spins at 2, 4, ..., 2n) as a determinant in x.
MPoly alternating_component_det(int n_sites);
Positions alternating_positions(int n_sites);

/// A_V(2n+1) and N_8(2n) from their product formulas.
mpz_class av_number(int n);
mpz_class n8_number(int n);
/// gamma_{2k} = A_V(2k+1), gamma_{2k+1} = N_8(2k+2).
mpz_class gamma_number(int n_sites);

/// <psi_N| (|psi_{N_1}> x ... x |psi_{N_m}>) at tau = 1 and rational x.
Rational overlap(const std::vector<int>& parts, const Rational& x);
/// x^n F_N(x, 1/x) cleared to a polynomial in x.
MPoly overlap_prefactor(int n_sites);

/// Determinant equals the covector contraction, with x <-> alpha symmetry.
Report check_scalar_products(int n_max);
/// General-tau determinants against the epsilon sum, plus the f recurrence and tau = 1 binomials.
Report check_general_tau_scalar(int n_max);
/// Alternating components from determinants against tables, and A_V at x = 1 up to n_av.
Report check_alternating_components(int n_max, int n_av);
/// Supersymmetric-point identities for N <= 2 n_max + 1.
Report check_susy_identities(int n_max);
/// Overlap factorisation over compositions with at most one odd part, plus permutation invariance.
Report check_conjecture_overlaps(int n_max, const std::vector<Rational>& xs);

}  // namespace bqkz
