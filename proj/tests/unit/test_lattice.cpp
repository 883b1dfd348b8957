#include "bqkz/generic_point.hpp"
#include "bqkz/lattice_checks.hpp"
#include "doctest.h"

using namespace bqkz;

TEST_CASE("local lattice identities") {
  const Report r = check_lattice_identities(1, 20);
  INFO(r.to_json().dump());
  CHECK(r.pass());
}

TEST_CASE("transfer matrix structure") {
  const Report r = check_transfer_structure(3, 2, 3);
  INFO(r.to_json().dump());
  CHECK(r.pass());
}

TEST_CASE("N = 1 transfer matrix at z = 1") {
  Sampler smp(4);
  const GenericPoint gp = sample_generic_point(smp);
  const auto T = transfer_matrix(Rational(1), {Rational(3)}, gp.params());
  const Rational& q = gp.q;
  const Rational lam = bracket(q * q) * bracket(gp.betabar) / (bracket(q) * bracket(gp.betabar / q));
  CHECK(T.is_scalar(lam));
}

TEST_CASE("N = 1 scattering operator") {
  Sampler smp(8);
  const GenericPoint gp = sample_generic_point(smp);
  const Rational z1(5, 3);
  const auto S = scattering_operator(1, {z1}, gp.params());
  const auto k1 = k_matrix(gp.s * gp.s * z1, gp.beta);
  const auto kn = k_matrix(gp.s * z1, gp.s * gp.betabar);
  CHECK(S(0, 0) == Rational(1));
  CHECK(S(1, 1) == k1[3] * kn[3]);
}

TEST_CASE("local operators") {
  using V = StateVector<Rational>;
  V updown(4, Rational(0));
  updown[index_of_down({2}, 2)] = 1;
  CHECK(magnetisation<Rational>(2).apply(updown) == V(4, Rational(0)));
  V udd(8, Rational(0));
  udd[index_of_down({2, 3}, 3)] = 1;
  const V p = apply_parity(udd, 3);
  CHECK(p[index_of_down({1, 2}, 3)] == Rational(1));
  V dd(4, Rational(0));
  dd[index_of_down({1, 2}, 2)] = 1;
  const V th = apply_insertion(dd, 2, 2, 0);
  CHECK(th[index_of_down({1, 3}, 3)] == Rational(1));
  CHECK(apply_spin_reversal(updown, 2)[index_of_down({1}, 2)] == Rational(1));
  CHECK(increasing_tuples(5, 2).size() == 10);
  CHECK(SectorBasis(5, 2).find({2, 4}) >= 0);
}

TEST_CASE("divided difference squares to identity") {
  Sampler smp(12);
  for (int t = 0; t < 10; ++t) {
    const Rational q = smp.generic_rational(), z = smp.generic_rational(), w = smp.generic_rational();
    if (z == w || z == -w) continue;
    const Rational c1 = smp.rational(), c2 = smp.rational();
    std::function<Rational(const Rational&, const Rational&)> f = [&](const Rational& a, const Rational& b) {
      return c1 * a * a + c2 / b + a * b;
    };
    std::function<Rational(const Rational&, const Rational&)> df = [&](const Rational& a, const Rational& b) {
      return divided_difference(f, a, b, q);
    };
    CHECK(divided_difference(df, z, w, q) == f(z, w));
    const Rational c(7);
    std::function<Rational(const Rational&, const Rational&)> cf = [&](const Rational&, const Rational&) { return c; };
    CHECK(divided_difference(cf, z, w, q) == c * (bracket(q * w / z) - bracket(q)) / bracket(z / w));
  }
}
