#include "bqkz/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>

#include "bqkz/generic_point.hpp"
#include "bqkz/homogeneous.hpp"
#include "bqkz/jet.hpp"
#include "bqkz/lattice.hpp"
#include "bqkz/qkz.hpp"

namespace bqkz {

namespace {

using Q = Rational;
using C = Cyc12;

void require_nonzero_x(const Q& x) {
  if (x.is_zero()) throw DomainError("x = 0 is outside the combinatorial point");
}

StateVector<C> lift(const StateVector<Q>& v) { return {v.begin(), v.end()}; }

/// -[q beta z]/[q^2 beta z] written through B = beta^2.
C lambda_closed(const C& z, const C& q, const C& B) {
  const C z2 = z * z;
  return -q * checked_div(q * q * B * z2 - C(1), q * q * q * q * B * z2 - C(1), "[q^2 beta z]");
}

/// tr_0 K_0(qz; betabar) K_0(z; beta).
C lambda_trace(const C& z, const C& q, const C& B, const C& Bbar) {
  return C(1) + k_entry_sq(q * q * z * z, Bbar) * k_entry_sq(z * z, B);
}

/// Ratio (T v)_k / v_k at the first nonzero entry, or nullopt when T v is not a multiple of v.
std::optional<C> eigen_ratio(const StateVector<C>& v, const StateVector<C>& tv) {
  std::optional<C> lambda;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) {
      if (!tv[k].is_zero()) return std::nullopt;
      continue;
    }
    const C r = tv[k] / v[k];
    if (!lambda) lambda = r;
    else if (!(*lambda == r)) return std::nullopt;
  }
  return lambda;
}

bool sector_connected(const OperatorMatrix<Q>& h) {
  const std::size_t dim = h.dim();
  if (dim == 0) return true;
  std::vector<bool> seen(dim, false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const std::size_t r = todo.front();
    todo.pop();
    for (std::size_t c = 0; c < dim; ++c)
      if (!seen[c] && !h(r, c).is_zero()) {
        seen[c] = true;
        ++count;
        todo.push(c);
      }
  }
  return count == dim;
}

}  // namespace

HamiltonianParams<Q> combinatorial_params(int n_sites, const Q& x) {
  require_nonzero_x(x);
  if (n_sites < 1) throw std::invalid_argument("hamiltonian: need at least one site");
  const Q half(1, 2);
  return {n_sites, Q(-1, 2), half * (half - x), half * (half - Q(1) / x)};
}

OperatorMatrix<Q> hamiltonian_sector(const HamiltonianParams<Q>& h, int n_down) {
  const SectorBasis basis(h.n_sites, n_down);
  OperatorMatrix<Q> m(basis.size());
  const std::size_t dim = std::size_t{1} << h.n_sites;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    StateVector<Q> e(dim, Q(0));
    e[basis.state(c)] = Q(1);
    const StateVector<Q> col = hamiltonian_apply(e, h);
    for (std::size_t r = 0; r < basis.size(); ++r) m(r, c) = col[basis.state(r)];
  }
  return m;
}

std::vector<double> hamiltonian_sector_double(int n_sites, int n_down, double x) {
  if (x == 0.0) throw DomainError("x = 0 is outside the combinatorial point");
  const SectorBasis basis(n_sites, n_down);
  const std::size_t dim = basis.size();
  const double p = 0.5 * (0.5 - x);
  const double pbar = 0.5 * (0.5 - 1.0 / x);
  std::vector<double> m(dim * dim, 0.0);
  for (std::size_t c = 0; c < dim; ++c) {
    const std::uint64_t idx = basis.state(c);
    auto spin = [&](int pos) { return bit_at(idx, n_sites, pos) == 0 ? 1 : -1; };
    double diag = 0.0;
    for (int k = 0; k + 1 < n_sites; ++k) {
      diag += 0.25 * spin(k) * spin(k + 1);
      if (spin(k) != spin(k + 1)) {
        const long r = basis.find_state(idx ^ (std::uint64_t{3} << (n_sites - 2 - k)));
        m[static_cast<std::size_t>(r) * dim + c] -= 1.0;
      }
    }
    diag += p * spin(0) + pbar * spin(n_sites - 1);
    m[c * dim + c] += diag;
  }
  return m;
}

Q ground_energy(int n_sites, const Q& x) {
  require_nonzero_x(x);
  const Q d = Q(1) - x;
  return Q(-(3 * n_sites - 1), 4) - d * d / (Q(2) * x);
}

double ground_energy(int n_sites, double x) {
  if (x == 0.0) throw DomainError("x = 0 is outside the combinatorial point");
  return -(3.0 * n_sites - 1.0) / 4.0 - (1.0 - x) * (1.0 - x) / (2.0 * x);
}

Report check_eigenpair(int n_max, const std::vector<Q>& xs) {
  Report rep("eigenpair", n_max, 0, static_cast<int>(xs.size()), "H psi_N = E0 psi_N");
  bool mutation_failed = false;
  for (int n = 1; n <= n_max; ++n) {
    const ComponentTable table = components_cached(n, Formula::TauOne, TauMode::One);
    for (const Q& x : xs) {
      const auto h = combinatorial_params(n, x);
      const Q e0 = ground_energy(n, x);
      StateVector<Q> psi = table.evaluate(x);
      auto residual_zero = [&](const StateVector<Q>& v) {
        const StateVector<Q> hv = hamiltonian_apply(v, h);
        for (std::size_t k = 0; k < v.size(); ++k)
          if (!(hv[k] == e0 * v[k])) return false;
        return true;
      };
      rep.check("eigenpair", residual_zero(psi), {{"N", n}, {"x", x.str()}, {"E0", e0.str()}});
      if (n >= 2) {
        psi[index_of_down(table.components().begin()->first, n)] += Q(1);
        if (!residual_zero(psi)) mutation_failed = true;
      }
    }
  }
  if (n_max >= 2) rep.check("mutation-perturbed-component-detected", mutation_failed);
  return rep;
}

Report check_numeric_ground(int n_max, const std::vector<double>& xs) {
  Report rep("numeric-ground", n_max, 0, static_cast<int>(xs.size()), "E0 is the non-degenerate sector minimum");
  nlohmann::json negative = nlohmann::json::array();
  for (int n = 1; n <= n_max; ++n) {
    const int n_down = n / 2;
    for (double x : xs) {
      const std::vector<double> raw = hamiltonian_sector_double(n, n_down, x);
      const auto dim = static_cast<Eigen::Index>(std::sqrt(static_cast<double>(raw.size())) + 0.5);
      const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(raw.data(), dim,
                                                                                                      dim);
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(Eigen::MatrixXd(m), Eigen::EigenvaluesOnly);
      const Eigen::VectorXd ev = solver.eigenvalues();
      const double e0 = ground_energy(n, x);
      const double tol = 1e-9 * (1.0 + std::abs(e0));
      const double gap = dim > 1 ? ev(1) - ev(0) : INFINITY;
      nlohmann::json ctx = {{"N", n}, {"x", x}, {"E0", e0}, {"min", ev(0)}};
      if (dim > 1) ctx["gap"] = gap;
      if (x > 0) {
        rep.check("minimum-equals-E0", std::abs(ev(0) - e0) < tol, ctx);
        if (dim > 1) {
          if (!(gap > 1e-9)) {
            std::vector<double> low(ev.data(), ev.data() + std::min<Eigen::Index>(dim, 6));
            ctx["lowest"] = low;
          }
          rep.check("spectral-gap", gap > 1e-9, ctx);
        }
      } else {
        bool present = false;
        for (Eigen::Index k = 0; k < dim; ++k) present = present || std::abs(ev(k) - e0) < tol;
        ctx["E0-in-spectrum"] = present;
        ctx["E0-minimal"] = std::abs(ev(0) - e0) < tol;
        negative.push_back(ctx);
      }
    }
  }
  if (!negative.empty()) rep.observe("negative-x", negative);
  return rep;
}

Report check_hamiltonian_structure(int n_max, const std::vector<Q>& xs) {
  Report rep("hamiltonian-structure", n_max, 0, static_cast<int>(xs.size()), "sector Hamiltonian structure");
  for (int n = 1; n <= n_max; ++n)
    for (const Q& x : xs) {
      const auto h = combinatorial_params(n, x);
      const nlohmann::json ctx = {{"N", n}, {"x", x.str()}};
      const auto full = hamiltonian(h);
      const auto mag = magnetisation<Q>(n);
      rep.check("commutes-with-magnetisation", full * mag == mag * full, ctx);
      bool symmetric = true;
      for (std::size_t r = 0; r < full.dim(); ++r)
        for (std::size_t c = 0; c < r; ++c) symmetric = symmetric && full(r, c) == full(c, r);
      rep.check("symmetric", symmetric, ctx);
      if (x <= Q(0)) continue;
      const auto hs = hamiltonian_sector(h, n / 2);
      const Q lambda = Q(n - 1) + x + Q(1) / x;
      bool offdiag = true;
      bool nonneg = true;
      for (std::size_t r = 0; r < hs.dim(); ++r)
        for (std::size_t c = 0; c < hs.dim(); ++c) {
          if (r == c) {
            nonneg = nonneg && hs(r, c) <= lambda;
            continue;
          }
          const std::uint64_t diff = SectorBasis(n, n / 2).state(r) ^ SectorBasis(n, n / 2).state(c);
          const bool exchange = __builtin_popcountll(diff) == 2 && (diff & (diff >> 1)) != 0;
          offdiag = offdiag && hs(r, c) == (exchange ? Q(-1) : Q(0));
        }
      rep.check("off-diagonal-exchange-minus-one", offdiag, ctx);
      rep.check("lambda-minus-H-nonnegative", nonneg, ctx);
      rep.check("lambda-minus-H-irreducible", sector_connected(hs), ctx);
    }
  return rep;
}

Report check_transfer_eigen(int n_inhom, int n_hom, std::uint64_t seed, int trials) {
  Report rep("transfer", std::max(n_inhom, n_hom), seed, trials, "transfer-matrix eigenvalue");
  Sampler smp(seed);
  const C q = C::q_special();
  nlohmann::json measured = nlohmann::json::array();

  // Inhomogeneous: Psi from residues at s = 1.
  for (int n = 1; n <= n_inhom; ++n)
    for (int t = 0; t < trials; ++t) {
      const int sign = t % 2 == 0 ? 1 : -1;
      const bool ok = with_resampling([&] {
        const Q beta = smp.generic_rational();
        const QkzParams<C> qp{q, C(1), C(beta), C(sign) / (C(beta) * q)};
        const auto bp = qp.boundary();
        std::vector<C> zs;
        for (const Q& r : sample_points(smp, n)) zs.emplace_back(r);
        const C z(smp.generic_rational());
        const StateVector<C> psi = qkz_vector(Variant::Psi, zs, qp);
        const StateVector<C> tpsi = transfer_apply(psi, z, zs, bp);
        const C lam = lambda_closed(z, q, bp.B);
        nlohmann::json ctx = {{"N", n}, {"beta", beta.str()}, {"betabar_sign", sign}, {"z", to_str(z)},
                              {"zs", field_list_json(zs)}};
        bool eigen = true;
        for (std::size_t k = 0; k < psi.size(); ++k) eigen = eigen && tpsi[k] == lam * psi[k];
        rep.check("inhomogeneous-eigenvalue", eigen, ctx);
        rep.check("trace-form", lam == lambda_trace(z, q, bp.B, bp.Bbar), ctx);
        // Same z and beta, fresh z_i: the eigenvalue must not move.
        std::vector<C> zs2;
        for (const Q& r : sample_points(smp, n)) zs2.emplace_back(r);
        const StateVector<C> psi2 = qkz_vector(Variant::Psi, zs2, qp);
        const auto r1 = eigen_ratio(psi, tpsi);
        const auto r2 = eigen_ratio(psi2, transfer_apply(psi2, z, zs2, bp));
        rep.check("eigenvalue-independent-of-inhomogeneities", r1 && r2 && *r1 == *r2, ctx);
        if (r1) measured.push_back({{"N", n}, {"beta", beta.str()}, {"z", to_str(z)}, {"lambda", to_str(*r1)}});
        if (n <= 3) {
          for (int i = 1; i <= n; ++i) {
            const C zi = zs[static_cast<std::size_t>(i - 1)];
            const auto ti = transfer_matrix(zi, zs, bp);
            const auto si = scattering_operator(i, zs, bp);
            nlohmann::json c2 = ctx;
            c2["i"] = i;
            rep.check("transfer-at-inhomogeneity-is-scattering", ti == lambda_closed(zi, q, bp.B) * si, c2);
          }
        }
      });
      rep.check("sampling-nonsingular", ok, {{"N", n}});
    }

  // Lambda_N(z) agrees across N for a fixed (beta, z).
  {
    const bool ok = with_resampling([&] {
      const Q beta = smp.generic_rational();
      const QkzParams<C> qp{q, C(1), C(beta), C(1) / (C(beta) * q)};
      const C z(smp.generic_rational());
      std::vector<C> lams;
      for (int n = 2; n <= std::min(3, n_inhom); ++n) {
        std::vector<C> zs;
        for (const Q& r : sample_points(smp, n)) zs.emplace_back(r);
        const StateVector<C> psi = qkz_vector(Variant::Psi, zs, qp);
        const auto r = eigen_ratio(psi, transfer_apply(psi, z, zs, qp.boundary()));
        if (!r) throw DomainError("not an eigenvector");
        lams.push_back(*r);
      }
      bool same = true;
      for (const C& l : lams) same = same && l == lams.front();
      rep.check("lambda-independent-of-N", same, {{"beta", beta.str()}, {"z", to_str(z)}});
    });
    if (n_inhom >= 3) rep.check("sampling-nonsingular", ok, nlohmann::json{{"stage", "lambda-across-N"}});
  }

  // Homogeneous: psi_N at tau = 1 with B = (x + q^2)/(x + q), Bbar = 1/(B q^2).
  bool mutation_failed = false;
  const std::vector<Q> xs{Q(1), Q(2), Q(7, 3), Q(1, 5), Q(10)};
  for (int n = 1; n <= n_hom; ++n) {
    const ComponentTable table = components_cached(n, Formula::TauOne, TauMode::One);
    for (const Q& x : xs) {
      const C B = (C(x) + q * q) / (C(x) + q);
      const BoundaryParams<C> bp{q, C(1), B, C(1) / (B * q * q)};
      const std::vector<C> ones(static_cast<std::size_t>(n), C(1));
      const StateVector<C> psi = lift(table.evaluate(x));
      const StateVector<C> wrong = lift(table.evaluate(x + Q(1)));
      for (int t = 0; t < trials; ++t) {
        const bool ok = with_resampling([&] {
          const C z(smp.generic_rational());
          const C lam = lambda_closed(z, q, B);
          const StateVector<C> tpsi = transfer_apply(psi, z, ones, bp);
          bool eigen = true;
          for (std::size_t k = 0; k < psi.size(); ++k) eigen = eigen && tpsi[k] == lam * psi[k];
          rep.check("homogeneous-eigenvalue", eigen, {{"N", n}, {"x", x.str()}, {"z", to_str(z)}});
          if (n >= 2 && t == 0) {
            const StateVector<C> tw = transfer_apply(wrong, z, ones, bp);
            for (std::size_t k = 0; k < wrong.size(); ++k)
              if (!(tw[k] == lam * wrong[k])) mutation_failed = true;
          }
        });
        rep.check("sampling-nonsingular", ok, {{"N", n}, {"x", x.str()}});
      }
    }
  }
  if (n_hom >= 2) rep.check("mutation-shifted-x-detected", mutation_failed);
  rep.observe("measured-eigenvalues", measured);
  return rep;
}

Report check_log_derivative(int n_max, std::uint64_t seed, int trials) {
  Report rep("log-derivative", n_max, seed, trials, "t(1)^{-1} t'(1) = -(4/[q])(H - C)");
  Sampler smp(seed);
  using J = Jet<C>;
  const C q = C::q_special();
  const C bq = bracket(q);
  const C bq2 = bracket(q * q);
  bool mutation_failed = false;
  for (int n = 1; n <= n_max; ++n)
    for (int t = 0; t < trials; ++t) {
      const bool ok = with_resampling([&] {
        const C beta(smp.generic_rational());
        const C betabar(smp.generic_rational());
        const C p = bq * bracket(beta * beta) / (C(4) * bracket(beta) * bracket(beta));
        const C pbar = bq * bracket(betabar * betabar) / (C(4) * bracket(betabar) * bracket(betabar));
        const C delta = bq2 / (C(2) * bq);
        const C cst = C(3 * n) * bq2 / (C(4) * bq) + p -
                      bq * bq * bracket(betabar * betabar) / (C(2) * bq2 * bracket(betabar) * bracket(q / betabar));
        const BoundaryParams<J> bp{J(q), J(1), J(beta * beta), J(betabar * betabar)};
        const std::vector<J> ones(static_cast<std::size_t>(n), J(1));
        const auto tj = transfer_matrix(J::variable(C(1)), ones, bp);
        const std::size_t dim = tj.dim();
        OperatorMatrix<C> t0(dim), t1(dim);
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t c = 0; c < dim; ++c) {
            t0(r, c) = tj(r, c).value();
            t1(r, c) = tj(r, c).derivative();
          }
        const C t0_scalar = t0(0, 0);
        if (t0_scalar.is_zero() || !t0.is_scalar(t0_scalar)) throw DomainError("t(1) is not an invertible scalar");
        const auto h = hamiltonian(HamiltonianParams<C>{n, delta, p, pbar});
        const auto id = OperatorMatrix<C>::identity(dim);
        const C k = -C(4) / bq;
        const nlohmann::json ctx = {{"N", n}, {"beta", to_str(beta)}, {"betabar", to_str(betabar)}};
        rep.check("log-derivative", t1 == t0_scalar * (k * (h - cst * id)), ctx);
        if (!(t1 == t0_scalar * (k * h))) mutation_failed = true;
      });
      rep.check("sampling-nonsingular", ok, {{"N", n}});
    }
  rep.check("mutation-dropped-constant-detected", mutation_failed);
  return rep;
}

}  // namespace bqkz
