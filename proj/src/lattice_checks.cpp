#include "bqkz/lattice_checks.hpp"

#include "bqkz/generic_point.hpp"

namespace bqkz {

namespace {

using Q = Rational;
using MatQ = OperatorMatrix<Q>;

MatQ on3(int p1, int p2, const Mat4<Q>& m) { return embed_pair(3, p1, p2, m); }

/// Partial transpose on the first factor.
Mat4<Q> transpose_first(const Mat4<Q>& m) {
  Mat4<Q> r;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) r[4 * (2 * i1 + i2) + (2 * j1 + j2)] = m[4 * (2 * j1 + i2) + (2 * i1 + j2)];
  return r;
}

enum class Pauli { X, Y, Z };

/// sigma_1 M sigma_1 for a Pauli matrix on the first factor (sigma^y handled
/// through its real conjugation action).
Mat4<Q> conjugate_first(const Mat4<Q>& m, Pauli p) {
  Mat4<Q> r;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) {
          const int row = 2 * i1 + i2, col = 2 * j1 + j2;
          if (p == Pauli::Z) {
            r[4 * row + col] = ((i1 + j1) % 2 == 0) ? m[4 * row + col] : -m[4 * row + col];
          } else {
            const Q& src = m[4 * (2 * (1 - i1) + i2) + (2 * (1 - j1) + j2)];
            r[4 * row + col] = (p == Pauli::Y && i1 != j1) ? -src : src;
          }
        }
  return r;
}

Mat4<Q> scale(const Q& s, Mat4<Q> m) {
  for (auto& x : m) x *= s;
  return m;
}

Mat4<Q> permutation4() { return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}; }

}  // namespace

Report check_lattice_identities(std::uint64_t seed, int trials) {
  Report rep("lattice", 3, seed, trials, "r-k-local-identities");
  Sampler smp(seed);
  for (int t = 0; t < trials; ++t) {
    const bool ok = with_resampling([&] {
      const GenericPoint gp = sample_generic_point(smp);
      const Q& q = gp.q;
      const Q z = smp.generic_rational(), w = smp.generic_rational();
      const nlohmann::json ctx = {{"point", gp.to_json()}, {"z", z.str()}, {"w", w.str()}};

      const MatQ ybe_l = on3(0, 1, r_matrix(z / w, q)) * on3(0, 2, r_matrix(z, q)) * on3(1, 2, r_matrix(w, q));
      const MatQ ybe_r = on3(1, 2, r_matrix(w, q)) * on3(0, 2, r_matrix(z, q)) * on3(0, 1, r_matrix(z / w, q));
      rep.check("yang-baxter", ybe_l == ybe_r, ctx);

      const MatQ br_l =
          on3(0, 1, rcheck_matrix(z / w, q)) * on3(1, 2, rcheck_matrix(z, q)) * on3(0, 1, rcheck_matrix(w, q));
      const MatQ br_r =
          on3(1, 2, rcheck_matrix(w, q)) * on3(0, 1, rcheck_matrix(z, q)) * on3(1, 2, rcheck_matrix(z / w, q));
      rep.check("braid-yang-baxter", br_l == br_r, ctx);

      const Mat4<Q> id4 = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
      rep.check("unitarity", mat4_product(r_matrix(z, q), r_matrix(Q(1) / z, q)) == id4, ctx);
      rep.check("r-at-one-is-permutation", r_matrix(Q(1), q) == permutation4(), ctx);
      const Mat4<Q> r = r_matrix(z, q);
      rep.check("r-symmetric",
                mat4_product(permutation4(), mat4_product(r, permutation4())) == r, ctx);

      const Mat4<Q> rt = transpose_first(r);
      const Q lhs_scale = bracket(q / z), rhs_scale = -bracket(q * q * z);
      rep.check("crossing-sigma-x",
                scale(lhs_scale, conjugate_first(rt, Pauli::X)) == scale(rhs_scale, r_matrix(-Q(1) / (q * z), q)),
                ctx);
      rep.check("crossing-sigma-y",
                scale(lhs_scale, conjugate_first(rt, Pauli::Y)) == scale(rhs_scale, r_matrix(Q(1) / (q * z), q)), ctx);
      rep.check("crossing-sigma-z", conjugate_first(r, Pauli::Z) == r_matrix(-z, q), ctx);

      const Mat2<Q> k1 = k_matrix(z, gp.beta), k2 = k_matrix(w, gp.beta);
      const MatQ K1 = embed_single(2, 0, k1), K2 = embed_single(2, 1, k2);
      const MatQ Rzw = embed_pair(2, 0, 1, r_matrix(z / w, q)), Rzw2 = embed_pair(2, 0, 1, r_matrix(z * w, q));
      rep.check("boundary-yang-baxter", Rzw * K1 * Rzw2 * K2 == K2 * Rzw2 * K1 * Rzw, ctx);
      rep.check("k-squared-form", k_matrix_sq(z * z, gp.beta * gp.beta) == k1, ctx);

      // tr_{0bar}(K_{0bar}(qz; betabar) R(z^2) P) against the scalar multiple of K_0(z; betabar).
      const Q& bb = gp.betabar;
      const Mat2<Q> kq = k_matrix(q * z, bb);
      Mat4<Q> kr = mat4_product(r_matrix(z * z, q), permutation4());
      for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 4; ++c) kr[4 * (2 * a) + c] *= kq[3 * a], kr[4 * (2 * a + 1) + c] *= kq[3 * a];
      Mat2<Q> tr{0, 0, 0, 0};
      for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) tr[2 * i + j] += kr[4 * (2 * a + i) + (2 * a + j)];
      const Q fac = bracket(q * q * z * z) * bracket(bb / z) / (bracket(z * z / q) * bracket(q * z / bb));
      Mat2<Q> expect = k_matrix(z, bb);
      for (auto& x : expect) x *= fac;
      rep.check("k-trace-identity", tr == expect, ctx);
    });
    rep.check("sampling-nonsingular", ok);
  }
  // Fixed examples.
  const Cyc12 i = Cyc12::imag_unit();
  const Mat2<Cyc12> sz = {1, 0, 0, -1};
  rep.check("k-at-i-is-sigma-z", k_matrix(i, Cyc12(Rational(3, 7))) == sz);
  rep.check("k-at-one-is-identity", k_matrix(Q(1), Q(5, 3)) == Mat2<Q>{1, 0, 0, 1});
  return rep;
}

Report check_transfer_structure(int n_max, std::uint64_t seed, int trials) {
  Report rep("transfer-structure", n_max, seed, trials, "transfer-commutation-and-symmetries");
  Sampler smp(seed);
  for (int n = 1; n <= n_max; ++n) {
    for (int t = 0; t < trials; ++t) {
      const bool ok = with_resampling([&] {
        const GenericPoint gp = sample_generic_point(smp);
        const auto p = gp.params();
        const std::vector<Q> zs = sample_points(smp, n);
        const Q z = smp.generic_rational(), w = smp.generic_rational();
        const nlohmann::json ctx = {{"N", n}, {"point", gp.to_json()}, {"zs", field_list_json(zs)},
                                    {"z", z.str()}, {"w", w.str()}};
        const MatQ Tz = transfer_matrix(z, zs, p);
        const MatQ Tw = transfer_matrix(w, zs, p);
        rep.check("transfer-commutation", Tz * Tw == Tw * Tz, ctx);
        rep.check("transfer-even-in-z", transfer_matrix(-z, zs, p) == Tz, ctx);
        const Q& q = gp.q;
        Q fac = bracket(gp.beta / z) * bracket(gp.betabar / (q * z)) /
                (bracket(gp.betabar * z) * bracket(q * gp.beta * z));
        for (const Q& zi : zs)
          fac *= bracket(q * zi / z) * bracket(q / (z * zi)) / (bracket(q * q * z / zi) * bracket(q * q * z * zi));
        rep.check("transfer-crossing-symmetry", transfer_matrix(Q(1) / (q * z), zs, p) == fac * Tz, ctx);
        if (n <= 3) {
          // S^(i)(.., s^2 z_j, ..) S^(j) = S^(j)(.., s^2 z_i, ..) S^(i)
          const Q s2 = gp.s * gp.s;
          for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
              auto zj = zs, zi = zs;
              zj[static_cast<std::size_t>(j - 1)] *= s2;
              zi[static_cast<std::size_t>(i - 1)] *= s2;
              const MatQ lhs = scattering_operator(i, zj, p) * scattering_operator(j, zs, p);
              const MatQ rhs = scattering_operator(j, zi, p) * scattering_operator(i, zs, p);
              rep.check("scattering-compatibility", lhs == rhs, ctx);
            }
        }
      });
      rep.check("sampling-nonsingular", ok);
    }
  }
  // z^4 = 1 over Q(zeta12): generic rational q and the special point q = zeta^4.
  const Cyc12 i = Cyc12::imag_unit();
  for (int n = 1; n <= std::max(n_max, 4); ++n) {
    for (int t = 0; t < 2; ++t) {
      const bool ok = with_resampling([&] {
        const Cyc12 q = t == 0 ? Cyc12::q_special() : Cyc12(Rational(smp.generic_rational()) * smp.generic_rational());
        const Cyc12 beta = Cyc12(smp.generic_rational());
        const Cyc12 betabar = Cyc12(Rational(1)) / (beta * q);
        const BoundaryParams<Cyc12> p{q, q, beta * beta, betabar * betabar};
        std::vector<Cyc12> zs;
        for (int k = 0; k < n; ++k) zs.emplace_back(smp.generic_rational());
        for (const Cyc12& z : {Cyc12(1), Cyc12(-1), i, -i}) {
          const Cyc12 lam = bracket(q * q) * bracket(betabar / z) / (bracket(q) * bracket(betabar / (q * z)));
          const Cyc12 one(1);
          StateVector<Cyc12> e(std::size_t{1} << n, Cyc12(0));
          bool scalar = true;
          for (std::size_t c = 0; c < e.size() && scalar; ++c) {
            std::fill(e.begin(), e.end(), Cyc12(0));
            e[c] = one;
            const auto col = transfer_apply(e, z, zs, p);
            for (std::size_t r = 0; r < e.size(); ++r)
              if (!(col[r] == (r == c ? lam : Cyc12(0)))) scalar = false;
          }
          rep.check("transfer-scalar-at-fourth-roots", scalar,
                    {{"N", n}, {"q", q.str()}, {"z", z.str()}, {"zs", field_list_json(zs)}});
        }
      });
      rep.check("sampling-nonsingular", ok);
    }
  }
  return rep;
}

}  // namespace bqkz
