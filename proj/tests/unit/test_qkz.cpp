#include "bqkz/generic_point.hpp"
#include "bqkz/qkz.hpp"
#include "bqkz/qkz_checks.hpp"
#include "doctest.h"

using namespace bqkz;

namespace {

void require_pass(const Report& r) {
  INFO(r.to_json().dump());
  CHECK(r.pass());
  CHECK(r.checks_run() > 0);
}

QkzParams<Rational> params_from(const GenericPoint& gp) { return {gp.q, gp.s, gp.beta, gp.betabar}; }

}  // namespace

TEST_CASE("N = 2 components") {
  Sampler smp(21);
  const GenericPoint gp = sample_generic_point(smp);
  const auto p = params_from(gp);
  const std::vector<Rational> z{Rational(2, 3), Rational(5, 7)};
  CHECK(eval_component(Variant::Psi, {1}, z, p) == bracket(gp.beta * z[0]));
  CHECK(eval_component(Variant::Psi, {2}, z, p) == -bracket(gp.q * gp.beta * z[1]));
  CHECK(eval_component(Variant::PsiBar, {2}, z, p) == eval_component(Variant::Psi, {1}, z, p));
}

TEST_CASE("N = 3 first component matches the expanded product") {
  Sampler smp(22);
  const GenericPoint gp = sample_generic_point(smp);
  const auto p = params_from(gp);
  const std::vector<Rational> z{Rational(3, 4), Rational(-5, 2), Rational(7, 3)};
  const Rational& q = gp.q;
  CHECK(eval_component(Variant::Psi, {1}, z, p) ==
        bracket(gp.beta * z[0]) * bracket(q * z[2] / z[1]) * bracket(q * q * z[1] * z[2]));
}

TEST_CASE("residue integrand evaluates as a product") {
  Sampler smp(23);
  const GenericPoint gp = sample_generic_point(smp);
  const auto p = params_from(gp);
  const std::vector<Rational> z{Rational(3, 4), Rational(-5, 2), Rational(7, 3), Rational(2)};
  const auto fp = build_integrand(Variant::Psi, {1, 3}, z, p);
  const std::vector<Rational> w{Rational(11, 5), Rational(-4, 9)};
  Rational direct = power(-bracket(gp.q), 2);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) direct *= bracket(gp.q * z[j] / z[i]) * bracket(gp.q * gp.q * z[i] * z[j]);
  const Rational &w1 = w[0], &w2 = w[1], &q = gp.q;
  Rational num = bracket(q * w2 / w1) * bracket(w1 / w2) * bracket(q * w1 * w2) * bracket(q * q * w1 * w1) *
                 bracket(q * q * w1 * w2) * bracket(q * q * w2 * w2) * bracket(gp.beta * w1) * bracket(gp.beta * w2);
  Rational den(1);
  const std::vector<int> a{1, 3};
  for (int i = 0; i < 2; ++i) {
    for (int j = 1; j <= a[i]; ++j) den *= bracket(z[j - 1] / w[i]);
    for (int j = a[i]; j <= 4; ++j) den *= bracket(q * z[j - 1] / w[i]);
    for (int j = 1; j <= 4; ++j) den *= bracket(q * q * w[i] * z[j - 1]);
  }
  CHECK(fp.evaluate(w) == direct * num / den);
}

TEST_CASE("pole collision is reported") {
  Sampler smp(24);
  const GenericPoint gp = sample_generic_point(smp);
  const auto p = params_from(gp);
  // z_1 = q z_2: [z_1/w] and [q z_2/w] both vanish at w = z_1.
  const std::vector<Rational> z{gp.q * Rational(3, 4), Rational(3, 4), Rational(7, 3), Rational(2)};
  CHECK_THROWS_AS((void)eval_component(Variant::Psi, {2, 3}, z, p), DomainError);
}

TEST_CASE("qkz suites") {
  require_pass(check_special_components(5, 1, 3));
  require_pass(check_exchange(4, 2, 2));
  require_pass(check_reflection(4, 3, 2));
  require_pass(check_bqkz(4, 4, 2));
  require_pass(check_parity_inhomogeneous(4, 5, 2));
  require_pass(check_psi_equals_psibar(4, 6, 2));
  require_pass(check_degrees_and_braid(4, 7));
}
