#include "bqkz/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace bqkz {

namespace {

const MPoly kX = MPoly::variable(Var::X);
const MPoly kAlpha = MPoly::variable(Var::Alpha);
const MPoly kTau = MPoly::variable(Var::Tau);

MPoly swap_x_alpha(const MPoly& p) {
  return p.map_exponents([](const Exponent& e) {
    Exponent r = e;
    std::swap(r[static_cast<int>(Var::X)], r[static_cast<int>(Var::Alpha)]);
    return r;
  });
}

Rational binom(long a, long b) { return Rational(binomial(a, b)); }

Rational at_x(const MPoly& p, const Rational& x) { return p.substitute(Var::X, x).constant_term(); }

mpz_class factorial(long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

/// Nonzero entries of psi_N(x) at tau = 1, indexed by basis state.
using SparseVec = std::vector<std::pair<std::uint64_t, Rational>>;

class OverlapEvaluator {
 public:
  explicit OverlapEvaluator(Rational x) : x_(std::move(x)) {}

  const StateVector<Rational>& dense(int n) {
    auto it = dense_.find(n);
    if (it == dense_.end())
      it = dense_.emplace(n, components_cached(n, Formula::TauOne, TauMode::One).evaluate(x_)).first;
    return it->second;
  }
  const SparseVec& sparse(int n) {
    auto it = sparse_.find(n);
    if (it == sparse_.end()) {
      SparseVec s;
      const auto& d = dense(n);
      for (std::size_t k = 0; k < d.size(); ++k)
        if (!d[k].is_zero()) s.emplace_back(k, d[k]);
      it = sparse_.emplace(n, std::move(s)).first;
    }
    return it->second;
  }

  Rational overlap(const std::vector<int>& parts) {
    const int total = std::accumulate(parts.begin(), parts.end(), 0);
    const auto& big = dense(total);
    Rational sum(0);
    std::function<void(std::size_t, std::uint64_t, const Rational&)> rec = [&](std::size_t k, std::uint64_t idx,
                                                                               const Rational& w) {
      if (k == parts.size()) {
        if (!big[idx].is_zero()) sum += big[idx] * w;
        return;
      }
      for (const auto& [i, v] : sparse(parts[k])) rec(k + 1, (idx << parts[k]) | i, w * v);
    };
    rec(0, 0, Rational(1));
    return sum;
  }

 private:
  Rational x_;
  std::map<int, StateVector<Rational>> dense_;
  std::map<int, SparseVec> sparse_;
};

void compositions(int n, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& visit) {
  if (n == 0) {
    visit(cur);
    return;
  }
  for (int first = 1; first <= n; ++first) {
    cur.push_back(first);
    compositions(n - first, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

MPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n > 20) throw std::invalid_argument("determinant: size too large for subset expansion");
  // d[S]: minor on the first |S| rows and the columns in S.
  std::vector<MPoly> d(std::size_t{1} << n);
  d[0] = MPoly(1);
  for (std::size_t mask = 1; mask < d.size(); ++mask) {
    const int k = __builtin_popcountll(mask);
    const auto& row = m[static_cast<std::size_t>(k - 1)];
    MPoly acc;
    int above = 0;
    for (int j = static_cast<int>(n) - 1; j >= 0; --j) {
      if (!((mask >> j) & 1U)) continue;
      const MPoly& e = row[static_cast<std::size_t>(j)];
      const MPoly& sub = d[mask & ~(std::size_t{1} << j)];
      if (!e.is_zero() && !sub.is_zero()) {
        if (above % 2 == 0)
          acc += e * sub;
        else
          acc -= e * sub;
      }
      ++above;
    }
    d[mask] = std::move(acc);
  }
  return d.back();
}

MPoly determinant_leibniz(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MPoly total;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    MPoly term(1);
    for (std::size_t r = 0; r < n; ++r) term *= m[r][perm[r]];
    if (inversions % 2 == 0)
      total += term;
    else
      total -= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

MPoly f_poly(int i, int j, int k) {
  if (i < 1 || j < 1) throw std::invalid_argument("f_poly: indices start at 1");
  const int e = 2 * (i - j) + k + 1;
  MPoly out;
  for (int m = 0; m <= j - 1; ++m) {
    const Rational c = binom(i - 1, e + m) * binom(j - 1, m);
    if (!c.is_zero()) out += MPoly::variable(Var::Tau, e + 2 * m) * c;
  }
  return out;
}

PolyMatrix scalar_product_matrix(int n_sites, DetMode mode) {
  if (n_sites < 1) throw std::invalid_argument("scalar product: need at least one site");
  const int n = n_sites / 2;
  const bool odd = n_sites % 2 == 1;
  const MPoly ax = kAlpha * kX;
  const MPoly apx = kAlpha + kX;
  PolyMatrix m(static_cast<std::size_t>(n), std::vector<MPoly>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      MPoly& e = m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (mode == DetMode::TauOne) {
        const int top = odd ? i + j - 1 : i + j - 2;
        const int low = odd ? 2 * i - j - 1 : 2 * i - j - 2;
        e = ax * binom(top, low) + apx * binom(top, low + 1) + MPoly(binom(top, low + 2));
      } else if (odd) {
        e = ax * f_poly(i, j + 1, 0) + apx * f_poly(i, j + 1, 1) + f_poly(i, j + 1, 2);
      } else {
        e = ax * f_poly(i, j, -2) + apx * f_poly(i, j, -1) + f_poly(i, j, 0);
      }
    }
  return m;
}

MPoly scalar_product_det(int n_sites, DetMode mode) { return determinant(scalar_product_matrix(n_sites, mode)); }

MPoly scalar_product_eps_sum(const ComponentTable& t, const MPoly& alpha) {
  const int N = t.sites();
  const int n = t.downs();
  MPoly total;
  for (std::uint64_t eps = 0; eps < (std::uint64_t{1} << n); ++eps) {
    Positions a;
    for (int k = 1; k <= n; ++k) a.push_back(N - 2 * (n - k) - static_cast<int>((eps >> (k - 1)) & 1U));
    total += t.at(a) * pow(alpha, __builtin_popcountll(eps));
  }
  return total;
}

Positions alternating_positions(int n_sites) {
  Positions a;
  for (int k = 1; k <= n_sites / 2; ++k) a.push_back(2 * k);
  return a;
}

MPoly alternating_component_det(int n_sites) {
  if (n_sites < 1) throw std::invalid_argument("alternating component: need at least one site");
  const int n = n_sites / 2;
  const bool odd = n_sites % 2 == 1;
  PolyMatrix m(static_cast<std::size_t>(n), std::vector<MPoly>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int top = odd ? i + j - 1 : i + j - 2;
      const int low = odd ? 2 * i - j - 1 : 2 * i - j;
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          odd ? kX * binom(top, low) + MPoly(binom(top, low + 1))
              : kX * binom(top, low - 1) + MPoly(binom(top, low));
    }
  return determinant(m);
}

mpz_class av_number(int n) {
  if (n < 0) throw std::invalid_argument("A_V: negative index");
  mpz_class num = 1, den = 1;
  for (int k = 1; k <= n; ++k) {
    num *= factorial(6 * k - 2) * factorial(2 * k - 1);
    den *= factorial(4 * k - 2) * factorial(4 * k - 1) * 2;
  }
  if (num % den != 0) throw std::logic_error("A_V product is not an integer");
  return num / den;
}

mpz_class n8_number(int n) {
  if (n < 0) throw std::invalid_argument("N_8: negative index");
  mpz_class num = 1, den = 1;
  for (int k = 0; k <= n - 1; ++k) {
    num *= (3 * k + 1) * factorial(6 * k) * factorial(2 * k);
    den *= factorial(4 * k) * factorial(4 * k + 1);
  }
  if (num % den != 0) throw std::logic_error("N_8 product is not an integer");
  return num / den;
}

mpz_class gamma_number(int n_sites) {
  const int k = n_sites / 2;
  return n_sites % 2 == 0 ? av_number(k) : n8_number(k + 1);
}

Rational overlap(const std::vector<int>& parts, const Rational& x) {
  if (parts.empty()) throw std::invalid_argument("overlap: empty composition");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("overlap: parts must be positive");
  OverlapEvaluator ev(x);
  return ev.overlap(parts);
}

MPoly overlap_prefactor(int n_sites) {
  const int n = n_sites / 2;
  const MPoly f = scalar_product_det(n_sites, DetMode::TauOne);
  MPoly out;
  for (int k = 0; k <= f.degree(Var::Alpha); ++k) out += f.coefficient_of(Var::Alpha, k) * pow(kX, n - k);
  out.require_polynomial("x^n F_N(x, 1/x)");
  return out;
}

Report check_scalar_products(int n_max) {
  Report rep("scalar-products", n_max, 0, 1, "determinant equals xi contraction");
  bool mutation_failed = false;
  for (int N = 1; N <= n_max; ++N) {
    const nlohmann::json ctx{{"N", N}};
    const MPoly det = scalar_product_det(N, DetMode::TauOne);
    const MPoly con = contract(components_cached(N, Formula::TauOne, TauMode::One), xi_covector(N, kAlpha));
    rep.check("determinant-equals-contraction", det == con, ctx);
    rep.check("x-alpha-symmetry", swap_x_alpha(det) == det && swap_x_alpha(con) == con, ctx);
    rep.check("alpha-degree", con.degree(Var::Alpha) <= N / 2, ctx);
    if (N >= 2) {
      auto m = scalar_product_matrix(N, DetMode::TauOne);
      m[0][0] += MPoly(1);
      if (!(determinant(m) == con)) mutation_failed = true;
    }
  }
  if (n_max >= 2) rep.check("mutation-perturbed-entry-detected", mutation_failed);
  return rep;
}

Report check_general_tau_scalar(int n_max) {
  Report rep("general-tau-scalar", n_max, 0, 1, "general-tau determinant equals epsilon sum");
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      for (int k = -3; k <= 3; ++k) {
        const nlohmann::json ctx{{"i", i}, {"j", j}, {"k", k}};
        const MPoly f = f_poly(i, j, k);
        rep.check("f-recurrence", f == f_poly(i, j + 1, k + 2) - kTau * f_poly(i, j, k + 1), ctx);
        rep.check("f-at-tau-one", f.substitute(Var::Tau, Rational(1)) == MPoly(binom(i + j - 2, 2 * i - j + k)), ctx);
        rep.check("f-polynomial", f.is_polynomial(), ctx);
      }
  for (int N = 1; N <= n_max; ++N) {
    const nlohmann::json ctx{{"N", N}};
    const MPoly det = scalar_product_det(N, DetMode::TauGeneral);
    const ComponentTable t = components_cached(N, Formula::General, TauMode::Symbolic);
    const MPoly eps = scalar_product_eps_sum(t, kAlpha);
    rep.check("determinant-equals-epsilon-sum", det == eps, ctx);
    rep.check("epsilon-sum-equals-contraction", eps == contract(t, xi_covector(N, kAlpha)), ctx);
    rep.check("tau-one-specialisation",
              det.substitute(Var::Tau, Rational(1)) == scalar_product_det(N, DetMode::TauOne), ctx);
  }
  return rep;
}

Report check_alternating_components(int n_max, int n_av) {
  Report rep("alternating-components", n_max, 0, 1, "alternating components as determinants");
  for (int N = 2; N <= n_max; ++N) {
    const nlohmann::json ctx{{"N", N}};
    const MPoly det = alternating_component_det(N);
    const auto t = components_cached(N, Formula::TauOne, TauMode::One);
    rep.check("determinant-equals-component", det == t.at(alternating_positions(N)), ctx);
    // Even N: alpha = 0. Odd N: leading alpha coefficient (alpha to infinity).
    const MPoly f = scalar_product_det(N, DetMode::TauOne);
    const MPoly limit = N % 2 == 0 ? f.substitute(Var::Alpha, Rational(0)) : f.coefficient_of(Var::Alpha, N / 2);
    rep.check("alpha-limit-specialisation", limit == det, ctx);
  }
  for (int n = 1; n <= n_av; ++n) {
    const nlohmann::json ctx{{"n", n}};
    rep.check("even-at-x-one-is-AV", at_x(alternating_component_det(2 * n), Rational(1)) == Rational(av_number(n)), ctx);
    rep.check("odd-at-x-one-is-N8",
              at_x(alternating_component_det(2 * n + 1), Rational(1)) == Rational(n8_number(n + 1)), ctx);
  }
  return rep;
}

Report check_susy_identities(int n_max) {
  Report rep("susy", 2 * n_max + 1, 0, 1, "supersymmetric-point identities");
  const Rational one(1);
  for (int N = 1; N <= 2 * n_max + 1; ++N) {
    const int n = N / 2;
    const int nb = N - n;
    const bool odd = N % 2 == 1;
    const auto t = components_cached(N, Formula::TauOne, TauMode::One);
    const StateVector<Rational> v = t.evaluate(one);
    Rational norm(0);
    for (const Rational& c : v) norm += c * c;
    const Rational alt = at_x(t.at(alternating_positions(N)), one);
    const Rational proj = contract(t, xi_covector(N, MPoly(1))).substitute(Var::X, one).constant_term();
    const nlohmann::json ctx{{"N", N}, {"norm", norm.str()}, {"alternating", alt.str()}, {"projection", proj.str()}};
    rep.check("alternating-component", alt == Rational(odd ? n8_number(n + 1) : av_number(n)), ctx);
    rep.check("chi-projection", proj == Rational(odd ? av_number(n + 1) : n8_number(n + 1)), ctx);
    rep.check("projection-equals-F(1,1)",
              proj == scalar_product_det(N, DetMode::TauOne).substitute(Var::Alpha, one).substitute(Var::X, one).constant_term(),
              ctx);
    rep.check("square-norm", norm == Rational(mpz_class(av_number(nb) * n8_number(n + 1))), ctx);
    rep.check("norm-factorisation", norm == alt * proj, ctx);
  }
  return rep;
}

Report check_conjecture_overlaps(int n_max, const std::vector<Rational>& xs) {
  Report rep("conjecture-overlaps", n_max, 0, static_cast<int>(xs.size()), "overlap factorisation");
  std::size_t compositions_checked = 0;
  for (const Rational& x : xs) {
    OverlapEvaluator ev(x);
    for (int N = 1; N <= n_max; ++N) {
      const Rational pref = at_x(overlap_prefactor(N), x);
      std::map<std::vector<int>, Rational> by_multiset;
      std::vector<int> cur;
      compositions(N, cur, [&](const std::vector<int>& parts) {
        const Rational o = ev.overlap(parts);
        const auto odd = std::count_if(parts.begin(), parts.end(), [](int p) { return p % 2 == 1; });
        nlohmann::json ctx{{"N", N}, {"x", x.str()}, {"parts", parts}, {"overlap", o.str()}};
        if (odd >= 2) {
          rep.check("vanishes-with-two-odd-parts", o.is_zero(), ctx);
          return;
        }
        Rational rhs = pref;
        for (int p : parts) rhs *= Rational(gamma_number(p));
        ctx["conjectured"] = rhs.str();
        rep.check("factorisation", o == rhs, ctx);
        auto key = parts;
        std::sort(key.begin(), key.end());
        auto [it, fresh] = by_multiset.emplace(key, o);
        if (!fresh) rep.check("permutation-invariance", it->second == o, ctx);
        ++compositions_checked;
      });
    }
  }
  rep.set_detail("nontrivial-cases", compositions_checked);
  return rep;
}

}  // namespace bqkz
