#include "bqkz/qkz_checks.hpp"

#include <algorithm>

#include "bqkz/generic_point.hpp"
#include "bqkz/laurent.hpp"
#include "bqkz/qkz.hpp"

namespace bqkz {

namespace {

using Q = Rational;
using VecQ = StateVector<Q>;

QkzParams<Q> qkz_params(const GenericPoint& gp) { return {gp.q, gp.s, gp.beta, gp.betabar}; }

VecQ psi(const std::vector<Q>& z, const QkzParams<Q>& p) { return qkz_vector(Variant::Psi, z, p); }

nlohmann::json trial_context(int n, const GenericPoint& gp, const std::vector<Q>& z) {
  return {{"N", n}, {"point", gp.to_json()}, {"zs", field_list_json(z)}};
}

/// Runs one sampled trial per (N, t) with resampling on singular points.
void for_each_trial(Report& rep, Sampler& smp, int n_min, int n_max, int trials,
                    const std::function<void(int, const GenericPoint&, const std::vector<Q>&)>& body,
                    int betabar_sign = 1) {
  for (int n = n_min; n <= n_max; ++n)
    for (int t = 0; t < trials; ++t) {
      const bool ok = with_resampling([&] {
        const GenericPoint gp = sample_generic_point(smp, betabar_sign);
        const std::vector<Q> z = sample_points(smp, n);
        body(n, gp, z);
      });
      rep.check("sampling-nonsingular", ok, {{"N", n}});
    }
}

}  // namespace

Report check_exchange(int n_max, std::uint64_t seed, int trials) {
  Report rep("exchange", n_max, seed, trials, "exchange-relations");
  Sampler smp(seed);
  bool mutation_failed = false;
  for_each_trial(rep, smp, 2, n_max, trials, [&](int n, const GenericPoint& gp, const std::vector<Q>& z) {
    const auto p = qkz_params(gp);
    for (Variant var : {Variant::Psi, Variant::PsiBar}) {
      const VecQ v = qkz_vector(var, z, p);
      for (int i = 1; i < n; ++i) {
        auto zs = z;
        std::swap(zs[static_cast<std::size_t>(i - 1)], zs[static_cast<std::size_t>(i)]);
        const VecQ target = qkz_vector(var, zs, p);
        VecQ lhs = v;
        const auto rc = rcheck_matrix(z[static_cast<std::size_t>(i - 1)] / z[static_cast<std::size_t>(i)], p.q);
        apply_pair(lhs, n, i - 1, i, rc);
        nlohmann::json ctx = trial_context(n, gp, z);
        ctx["i"] = i;
        rep.check(var == Variant::Psi ? "exchange-psi" : "exchange-psibar", lhs == target, ctx);
        if (var == Variant::Psi && n == 2) {
          auto bad = rc;
          bad[6] = -bad[6];
          bad[9] = -bad[9];
          VecQ mutated = v;
          apply_pair(mutated, n, i - 1, i, bad);
          if (!(mutated == target)) mutation_failed = true;
        }
      }
    }
  });
  rep.check("mutation-negated-b-weight-detected", mutation_failed);
  return rep;
}

Report check_reflection(int n_max, std::uint64_t seed, int trials, int betabar_sign) {
  Report rep("reflection", n_max, seed, trials, "reflection-relations");
  Sampler smp(seed);
  std::vector<int> signs = betabar_sign == 0 ? std::vector<int>{1, -1} : std::vector<int>{betabar_sign};
  nlohmann::json validated = nlohmann::json::object();
  bool mutation_failed = false;
  for (int sign : signs) {
    Report branch("reflection", n_max, seed, trials, "reflection-relations");
    for_each_trial(
        branch, smp, 1, n_max, trials,
        [&](int n, const GenericPoint& gp, const std::vector<Q>& z) {
          const auto p = qkz_params(gp);
          const VecQ v = psi(z, p);
          const nlohmann::json ctx = trial_context(n, gp, z);
          auto zl = z;
          zl[0] = Q(1) / z[0];
          const VecQ left_target = psi(zl, p);
          VecQ left = v;
          apply_single(left, n, 0, k_matrix(Q(1) / z[0], p.beta));
          branch.check("reflection-left", left == left_target, ctx);
          VecQ bad = v;
          apply_single(bad, n, 0, k_matrix(Q(1) / z[0], Q(2) * p.beta));
          if (!(bad == left_target)) mutation_failed = true;

          auto zr = z;
          const Q& zn = z.back();
          zr.back() = Q(1) / (p.s * p.s * zn);
          VecQ right = v;
          apply_single(right, n, n - 1, k_matrix(p.s * zn, p.s * p.betabar));
          branch.check("reflection-right", right == psi(zr, p), ctx);
        },
        sign);
    validated[sign > 0 ? "plus" : "minus"] = branch.pass();
    rep.merge(branch);
  }
  rep.observe("betabar-branches-validated", validated);
  rep.check("mutation-doubled-beta-detected", mutation_failed);
  return rep;
}

Report check_bqkz(int n_max, std::uint64_t seed, int trials) {
  Report rep("bqkz", n_max, seed, trials, "boundary-qkz-equations");
  Sampler smp(seed);
  bool mutation_failed = false;
  for_each_trial(rep, smp, 1, n_max, trials, [&](int n, const GenericPoint& gp, const std::vector<Q>& z) {
    const auto p = qkz_params(gp);
    const VecQ v = psi(z, p);
    for (int i = 1; i <= n; ++i) {
      auto zs = z;
      zs[static_cast<std::size_t>(i - 1)] *= p.s * p.s;
      const VecQ target = psi(zs, p);
      nlohmann::json ctx = trial_context(n, gp, z);
      ctx["i"] = i;
      rep.check("bqkz", scattering_apply(v, i, z, p.boundary()) == target, ctx);
      auto bp = p.boundary();
      bp.s = Q(2) * bp.s;
      if (!(scattering_apply(v, i, z, bp) == target)) mutation_failed = true;
    }
  });
  rep.check("mutation-doubled-s-detected", mutation_failed);
  return rep;
}

namespace {

/// P Psi(z; beta) = eps Psi(1/(s z_N), .., 1/(s z_1); q^2/(s beta)).
template <class F>
bool parity_holds(const std::vector<F>& z, const QkzParams<F>& p, bool force_eps_one, F* eps_out = nullptr) {
  const int n_sites = static_cast<int>(z.size());
  const int n = n_sites / 2;
  const StateVector<F> lhs = apply_parity(qkz_vector(Variant::Psi, z, p), n_sites);
  std::vector<F> zr;
  for (auto it = z.rbegin(); it != z.rend(); ++it) zr.push_back(F(1) / (p.s * *it));
  QkzParams<F> pr = p;
  pr.beta = p.q * p.q / (p.s * p.beta);
  F eps = power(p.q * p.q * p.q / (p.s * p.s), static_cast<long>((n_sites + 1) * n));
  if (eps_out) *eps_out = eps;
  if (force_eps_one) eps = F(1);
  StateVector<F> rhs = qkz_vector(Variant::Psi, zr, pr);
  for (auto& x : rhs) x = eps * x;
  return lhs == rhs;
}

}  // namespace

Report check_parity_inhomogeneous(int n_max, std::uint64_t seed, int trials) {
  Report rep("parity", n_max, seed, trials, "parity-of-inhomogeneous-vector");
  Sampler smp(seed);
  bool mutation_failed = false;
  for_each_trial(rep, smp, 1, n_max, trials, [&](int n, const GenericPoint& gp, const std::vector<Q>& z) {
    const nlohmann::json ctx = trial_context(n, gp, z);
    rep.check("parity-s-equals-v-cubed", parity_holds(z, qkz_params(gp), false), ctx);
    // Second branch s = i v^3 over Q(zeta12), where eps_N = (-1)^{(N+1)n}.
    const Cyc12 i = Cyc12::imag_unit();
    QkzParams<Cyc12> pc{Cyc12(gp.q), i * Cyc12(gp.s), Cyc12(gp.beta), Cyc12(gp.betabar)};
    std::vector<Cyc12> zc(z.begin(), z.end());
    Cyc12 eps;
    rep.check("parity-s-equals-i-v-cubed", parity_holds(zc, pc, false, &eps), ctx);
    if (!(eps == Cyc12(1)) && !parity_holds(zc, pc, true)) mutation_failed = true;
  });
  rep.check("mutation-eps-set-to-one-detected", mutation_failed);
  return rep;
}

Report check_psi_equals_psibar(int n_max, std::uint64_t seed, int trials) {
  Report rep("psibar", n_max, seed, trials, "psi-equals-psibar");
  Sampler smp(seed);
  bool mutation_failed = false;
  for_each_trial(rep, smp, 2, n_max, trials, [&](int n, const GenericPoint& gp, const std::vector<Q>& z) {
    const auto p = qkz_params(gp);
    const VecQ v = psi(z, p);
    rep.check("psibar-equals-psi", qkz_vector(Variant::PsiBar, z, p) == v, trial_context(n, gp, z));
    IntegrandMutation mut;
    mut.beta_factor_in_numerator = true;
    if (!(qkz_vector(Variant::PsiBar, z, p, mut) == v)) mutation_failed = true;
  });
  rep.check("mutation-beta-factor-in-numerator-detected", mutation_failed);
  return rep;
}

Report check_special_components(int n_max, std::uint64_t seed, int trials) {
  Report rep("special-components", n_max, seed, trials, "special-component-product-formulas");
  Sampler smp(seed);
  for_each_trial(rep, smp, 2, n_max, trials, [&](int n, const GenericPoint& gp, const std::vector<Q>& z) {
    const auto p = qkz_params(gp);
    const int m = n / 2, mb = n - m;
    Positions first, last;
    for (int i = 1; i <= m; ++i) first.push_back(i);
    for (int i = mb + 1; i <= n; ++i) last.push_back(i);
    const nlohmann::json ctx = trial_context(n, gp, z);
    rep.check("special-component-first", eval_component(Variant::Psi, first, z, p) == special_component_closed(z, p),
              ctx);
    rep.check("special-component-last", eval_component(Variant::Psi, last, z, p) == special_component_reversed(z, p),
              ctx);
    Positions bar_last;
    for (int i = m + 1; i <= n; ++i) bar_last.push_back(i);
    rep.check("special-component-bar", eval_component(Variant::PsiBar, bar_last, z, p) == special_component_closed(z, p),
              ctx);
    if (n <= 4) {
      for (const Positions& a : increasing_tuples(n, m)) {
        std::vector<int> order(static_cast<std::size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        const Q base = eval_component(Variant::Psi, a, z, p);
        while (std::next_permutation(order.begin(), order.end()))
          rep.check("residue-order-independence", eval_component(Variant::Psi, a, z, p, {}, order) == base, ctx);
      }
    }
  });
  return rep;
}

Report check_degrees_and_braid(int n_max, std::uint64_t seed) {
  Report rep("degrees", n_max, seed, 1, "degrees-parities-and-braid-limits");
  Sampler smp(seed);
  bool narrow_window_failed = false;
  for (int N = 2; N <= n_max; ++N) {
    const int n = N / 2;
    const bool even = N % 2 == 0;
    const bool ok = with_resampling([&] {
      const GenericPoint gp = sample_generic_point(smp);
      const auto p = qkz_params(gp);
      const std::vector<Q> z = sample_points(smp, N);
      for (const Positions& a : increasing_tuples(N, n)) {
        for (int i = 1; i <= N; ++i) {
          const bool in_a = std::find(a.begin(), a.end(), i) != a.end();
          const int window = in_a ? 2 * n - 1 : (even ? 2 * (n - 1) : 2 * n);
          const bool exact = even ? in_a : !in_a;
          std::vector<std::pair<Q, Q>> samples;
          while (static_cast<int>(samples.size()) < 2 * window + 4) {
            auto zz = z;
            const Q t = smp.generic_rational();
            if (std::any_of(samples.begin(), samples.end(), [&](const auto& s) { return s.first == t; })) continue;
            zz[static_cast<std::size_t>(i - 1)] = t;
            try {
              samples.emplace_back(t, eval_component(Variant::Psi, a, zz, p));
            } catch (const DomainError&) {
            }
          }
          nlohmann::json ctx = trial_context(N, gp, z);
          ctx["positions"] = positions_key(a);
          ctx["variable"] = i;
          LaurentUPoly<Q> f;
          try {
            f = interpolate_laurent(samples, -window, window);
          } catch (const OverdeterminedError&) {
            rep.check("laurent-degree-window", false, ctx);
            continue;
          }
          rep.check("laurent-degree-window", true, ctx);
          rep.check(in_a ? "odd-in-down-site-variable" : "even-in-up-site-variable", f.has_parity(in_a ? 1 : 0), ctx);
          if (!exact) continue;
          rep.check("exact-degree", !is_zero(f.coeff(window)) && !is_zero(f.coeff(-window)), ctx);
          try {
            (void)interpolate_laurent(samples, -window + 1, window - 1);
          } catch (const OverdeterminedError&) {
            narrow_window_failed = true;
          }
          // Braid limits: leading coefficients against the (N-1)-site vector.
          int up = 0, down = 0;
          for (int j = 1; j < i; ++j) (std::find(a.begin(), a.end(), j) != a.end() ? down : up)++;
          Positions reduced;
          for (int aj : a)
            if (aj != i) reduced.push_back(aj > i ? aj - 1 : aj);
          std::vector<Q> zr = z;
          zr.erase(zr.begin() + (i - 1));
          const Q smaller = eval_component(Variant::Psi, reduced, zr, p);
          Q pre0, preinf;
          if (even) {
            const Q sgn = (n + i + 1) % 2 == 0 ? Q(1) : Q(-1);
            pre0 = sgn / p.beta * pow(p.q, -up - 2 * down);
            preinf = -sgn * p.beta * pow(p.q, up + 2 * down);
          } else {
            const Q sgn = (i - 1) % 2 == 0 ? Q(1) : Q(-1);
            pre0 = sgn * pow(p.q, -2 * up - down);
            preinf = sgn * pow(p.q, 2 * up + down);
          }
          rep.check(even ? "braid-limit-zero-even" : "braid-limit-zero-odd", f.coeff(-window) == pre0 * smaller, ctx);
          rep.check(even ? "braid-limit-infinity-even" : "braid-limit-infinity-odd",
                    f.coeff(window) == preinf * smaller, ctx);
        }
      }
    });
    rep.check("sampling-nonsingular", ok, {{"N", N}});
  }
  rep.check("mutation-narrowed-window-detected", narrow_window_failed);
  return rep;
}

}  // namespace bqkz
