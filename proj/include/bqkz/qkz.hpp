#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "bqkz/lattice.hpp"

namespace bqkz {

/// Parameters of the inhomogeneous vectors: q, s with s^4 = q^6, beta, and
/// betabar with betabar^2 beta^2 q^2 = 1.
template <class F>
struct QkzParams {
  F q;
  F s;
  F beta;
  F betabar;

  [[nodiscard]] BoundaryParams<F> boundary() const { return {q, s, beta * beta, betabar * betabar}; }
};

/// Role of a factor in the residue evaluation: Contour factors carry the
/// enclosed poles w = z_j, Exclusion factors [w_i/w_j] vanish when two
/// variables sit on the same pole.
enum class FactorKind { Contour, Exclusion, Other };

/// Atomic factor [c * prod_k w_k^{pw_k}]^exp.
template <class F>
struct BracketFactor {
  F c;
  std::vector<int> pw;
  int exp;
  FactorKind kind = FactorKind::Other;
};

/// Raised when two poles of the integrand coincide at the sampled point.
class PoleCollision : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Integrand of a multiple contour integral with measure prod dw/(pi i w),
/// stored as a prefactor times bracket factors.
template <class F>
class FactorProduct {
 public:
  explicit FactorProduct(int nw) : nw_(nw), prefactor_(1) {}

  [[nodiscard]] int nvars() const { return nw_; }
  [[nodiscard]] const F& prefactor() const { return prefactor_; }
  [[nodiscard]] const std::vector<BracketFactor<F>>& factors() const { return factors_; }

  /// Zero prefactors only occur at special points and are rejected.
  void scale(const F& s) {
    if (is_zero(s)) throw PoleCollision("integrand prefactor vanishes");
    prefactor_ *= s;
  }
  /// Adds [c * prod w^pw]^exp; a factor free of w is folded into the prefactor.
  void add(const F& c, std::vector<int> pw, int exp, FactorKind kind = FactorKind::Other) {
    if (static_cast<int>(pw.size()) != nw_) throw std::invalid_argument("FactorProduct: exponent length mismatch");
    if (std::all_of(pw.begin(), pw.end(), [](int p) { return p == 0; })) {
      scale(power(bracket(c), exp));
      return;
    }
    factors_.push_back({c, std::move(pw), exp, kind});
  }

  /// Direct evaluation at a nonsingular point.
  [[nodiscard]] F evaluate(const std::vector<F>& w) const {
    F v = prefactor_;
    for (const auto& f : factors_) {
      F arg = f.c;
      for (int k = 0; k < nw_; ++k)
        if (f.pw[static_cast<std::size_t>(k)] != 0) arg *= power(w[static_cast<std::size_t>(k)], f.pw[static_cast<std::size_t>(k)]);
      const F b = bracket(arg);
      if (is_zero(b) && f.exp < 0) throw DomainError("FactorProduct::evaluate: singular point");
      v *= power(b, f.exp);
    }
    return v;
  }

  /// Iterated sum of residues at w_k = poles[j], taken in the given variable
  /// order (identity by default).
  [[nodiscard]] F residue_sum(const std::vector<F>& poles, std::vector<int> order = {}) const {
    if (order.empty()) {
      order.resize(static_cast<std::size_t>(nw_));
      std::iota(order.begin(), order.end(), 0);
    }
    if (static_cast<int>(order.size()) != nw_) throw std::invalid_argument("residue_sum: bad variable order");
    // The factor 2/w0 already accounts for the pole at -w0.
    std::vector<F> reps;
    for (const F& w0 : poles)
      if (std::none_of(reps.begin(), reps.end(), [&](const F& r) { return r == w0 || r == -w0; })) reps.push_back(w0);
    return residue_rec(0, order, factors_, prefactor_, reps);
  }

 private:
  static F residue_rec(std::size_t step, const std::vector<int>& order, const std::vector<BracketFactor<F>>& facs,
                       const F& acc, const std::vector<F>& poles) {
    if (step == order.size()) return acc;
    const auto i = static_cast<std::size_t>(order[step]);
    F total(0);
    std::vector<BracketFactor<F>> next;
    for (const F& w0 : poles) {
      int contour = 0, excluded = 0;
      F value = acc;
      next.clear();
      for (const auto& f : facs) {
        const int p = f.pw[i];
        if (p == 0) {
          next.push_back(f);
          continue;
        }
        bool only_i = true;
        for (std::size_t k = 0; k < f.pw.size(); ++k)
          if (k != i && f.pw[k] != 0) only_i = false;
        const F arg = f.c * power(w0, p);
        if (!only_i) {
          BracketFactor<F> g = f;
          g.c = arg;
          g.pw[i] = 0;
          next.push_back(std::move(g));
          continue;
        }
        if (arg * arg == F(1)) {
          if (f.kind == FactorKind::Exclusion && f.exp > 0) {
            ++excluded;
          } else if (f.kind == FactorKind::Contour && f.exp == -1) {
            ++contour;
            // [c w^p] ~ (2 p eps / w0) (w - w0) with eps = c w0^p = +-1
            value /= F(2 * p) * arg / w0;
          } else {
            throw PoleCollision("integrand singularities coincide at the sampled spectral parameters");
          }
        } else {
          value *= power(bracket(arg), f.exp);
        }
      }
      if (contour > 1) throw PoleCollision("contour poles coincide at the sampled spectral parameters");
      if (contour == 0 || excluded > 0) continue;
      total += residue_rec(step + 1, order, next, value * F(2) / w0, poles);
    }
    return total;
  }

  int nw_;
  F prefactor_;
  std::vector<BracketFactor<F>> factors_;
};

enum class Variant { Psi, PsiBar };

/// Deliberate corruptions used to show that a check can fail.
struct IntegrandMutation {
  bool beta_factor_in_numerator = false;
};

/// Integrand for (Psi_N)_a (down positions) or (PsiBar_N)_b (up positions).
template <class F>
FactorProduct<F> build_integrand(Variant variant, const Positions& pos, const std::vector<F>& z, const QkzParams<F>& p,
                                 IntegrandMutation mut = {}) {
  const int N = static_cast<int>(z.size());
  const int m = static_cast<int>(pos.size());
  const F& q = p.q;
  const F q2 = q * q;
  auto Z = [&](int j) -> const F& { return z[static_cast<std::size_t>(j - 1)]; };
  auto unit = [&](int i, int e) {
    std::vector<int> v(static_cast<std::size_t>(m), 0);
    v[static_cast<std::size_t>(i)] += e;
    return v;
  };
  auto pair = [&](int i, int ei, int j, int ej) {
    std::vector<int> v(static_cast<std::size_t>(m), 0);
    v[static_cast<std::size_t>(i)] += ei;
    v[static_cast<std::size_t>(j)] += ej;
    return v;
  };
  FactorProduct<F> fp(m);
  if (variant == Variant::Psi) {
    fp.scale(power(-bracket(q), m));
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) fp.scale(bracket(q * Z(j) / Z(i)) * bracket(q2 * Z(i) * Z(j)));
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        fp.add(q, pair(j, 1, i, -1), 1);
        fp.add(F(1), pair(i, 1, j, -1), 1, FactorKind::Exclusion);
        fp.add(q, pair(i, 1, j, 1), 1);
      }
      for (int j = i; j < m; ++j) fp.add(q2, pair(i, 1, j, 1), 1);
      fp.add(p.beta, unit(i, 1), 1);
      const int a = pos[static_cast<std::size_t>(i)];
      for (int j = 1; j <= a; ++j) fp.add(Z(j), unit(i, -1), -1, FactorKind::Contour);
      for (int j = a; j <= N; ++j) fp.add(q * Z(j), unit(i, -1), -1);
      for (int j = 1; j <= N; ++j) fp.add(q2 * Z(j), unit(i, 1), -1);
    }
  } else {
    fp.scale(power(bracket(q), m));
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) fp.scale(bracket(q * Z(j) / Z(i)) * bracket(q * Z(i) * Z(j)));
    for (int i = 1; i <= N; ++i) fp.scale(bracket(p.beta * Z(i)));
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        fp.add(q, pair(j, 1, i, -1), 1);
        fp.add(F(1), pair(i, 1, j, -1), 1, FactorKind::Exclusion);
        fp.add(q2, pair(i, 1, j, 1), 1);
      }
      for (int j = i; j < m; ++j) fp.add(q, pair(i, 1, j, 1), 1);
      const int b = pos[static_cast<std::size_t>(i)];
      for (int j = 1; j <= b; ++j) fp.add(q / Z(j), unit(i, 1), -1);
      for (int j = b; j <= N; ++j) fp.add(F(1) / Z(j), unit(i, 1), -1, FactorKind::Contour);
      for (int j = 1; j <= N; ++j) fp.add(q * Z(j), unit(i, 1), -1);
      fp.add(p.beta, unit(i, 1), mut.beta_factor_in_numerator ? 1 : -1);
    }
  }
  return fp;
}

/// (Psi_N)_a for down positions a, or (PsiBar_N)_b for up positions b.
template <class F>
F eval_component(Variant variant, const Positions& pos, const std::vector<F>& z, const QkzParams<F>& p,
                 IntegrandMutation mut = {}, const std::vector<int>& order = {}) {
  const int N = static_cast<int>(z.size());
  const int expected = variant == Variant::Psi ? N / 2 : (N + 1) / 2;
  if (static_cast<int>(pos.size()) != expected) throw std::invalid_argument("eval_component: wrong tuple length");
  for (std::size_t k = 0; k < pos.size(); ++k)
    if (pos[k] < 1 || pos[k] > N || (k > 0 && pos[k] <= pos[k - 1]))
      throw std::invalid_argument("eval_component: positions must increase within 1..N");
  if (N == 1) return F(1);
  return build_integrand(variant, pos, z, p, mut).residue_sum(z, order);
}

/// Full 2^N vector |Psi_N> (or |PsiBar_N>) with zeros outside the sector.
template <class F>
StateVector<F> qkz_vector(Variant variant, const std::vector<F>& z, const QkzParams<F>& p, IntegrandMutation mut = {}) {
  const int N = static_cast<int>(z.size());
  StateVector<F> v(std::size_t{1} << N, F(0));
  const int m = variant == Variant::Psi ? N / 2 : (N + 1) / 2;
  for (const Positions& pos : increasing_tuples(N, m)) {
    const Positions down = variant == Variant::Psi ? pos : complement_positions(pos, N);
    v[index_of_down(down, N)] = eval_component(variant, pos, z, p, mut);
  }
  return v;
}

/// Product formula for (Psi_N)_{1..n}.
template <class F>
F special_component_closed(const std::vector<F>& z, const QkzParams<F>& p) {
  const int N = static_cast<int>(z.size());
  const int n = N / 2;
  const F& q = p.q;
  auto Z = [&](int j) -> const F& { return z[static_cast<std::size_t>(j - 1)]; };
  F v(1);
  for (int i = 1; i <= n; ++i) v *= bracket(p.beta * Z(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v *= bracket(q * Z(i) * Z(j)) * bracket(q * Z(j) / Z(i));
  for (int i = n + 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) v *= bracket(q * Z(j) / Z(i)) * bracket(q * q * Z(i) * Z(j));
  return v;
}

/// Product formula for (Psi_N)_{nbar+1..N}.
template <class F>
F special_component_reversed(const std::vector<F>& z, const QkzParams<F>& p) {
  const int N = static_cast<int>(z.size());
  const int n = N / 2;
  const int nb = N - n;
  const F& q = p.q;
  auto Z = [&](int j) -> const F& { return z[static_cast<std::size_t>(j - 1)]; };
  F v = ((N + 1) * n) % 2 == 0 ? F(1) : F(-1);
  for (int i = nb + 1; i <= N; ++i) v *= bracket(q * p.beta * Z(i));
  for (int i = 1; i <= nb; ++i)
    for (int j = i + 1; j <= nb; ++j) v *= bracket(q * Z(j) / Z(i)) * bracket(q * Z(i) * Z(j));
  for (int i = nb + 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) v *= bracket(q * Z(j) / Z(i)) * bracket(q * q * Z(i) * Z(j));
  return v;
}

}  // namespace bqkz
