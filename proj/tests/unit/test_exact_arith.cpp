#include <random>

#include "bqkz/field.hpp"
#include "bqkz/laurent.hpp"
#include "bqkz/mpoly.hpp"
#include "bqkz/series.hpp"
#include "doctest.h"

using namespace bqkz;

namespace {

Rational rand_rat(std::mt19937_64& g) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 40);
  return {num(g), den(g)};
}

Cyc12 rand_cyc(std::mt19937_64& g) { return {rand_rat(g), rand_rat(g), rand_rat(g), rand_rat(g)}; }

const MPoly X = MPoly::variable(Var::X);
const MPoly TAU = MPoly::variable(Var::Tau);

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(3, -6).denominator() == 2);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 g(11);
  for (int t = 0; t < 200; ++t) {
    const Rational a = rand_rat(g), b = rand_rat(g), c = rand_rat(g);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const Cyc12 x = rand_cyc(g), y = rand_cyc(g), z = rand_cyc(g);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == Cyc12(1));
  }
}

TEST_CASE("cyclotomic special elements") {
  const Cyc12 q = Cyc12::q_special();
  const Cyc12 i = Cyc12::imag_unit();
  const Cyc12 z = Cyc12::zeta();
  CHECK(power(z, 4) == q);
  CHECK(power(z, 3) == i);
  CHECK(q * q * q == Cyc12(1));
  CHECK(!(q == Cyc12(1)));
  CHECK(i * i == Cyc12(-1));
  CHECK(power(z, 4) * power(z, 8) == Cyc12(1));
  CHECK(bracket(q) == q - q * q);
  CHECK(-(q + q.inverse()) == Cyc12(1));
  CHECK_THROWS_AS((void)Cyc12(0).inverse(), DomainError);
}

TEST_CASE("bracket") {
  CHECK(bracket(Rational(1)).is_zero());
  CHECK(bracket(Rational(2)) == Rational(3, 2));
  CHECK_THROWS_AS(bracket(Rational(0)), DomainError);
}

TEST_CASE("jet product rule on random rational functions") {
  std::mt19937_64 g(5);
  for (int t = 0; t < 100; ++t) {
    const Rational a = rand_rat(g), b = rand_rat(g), c = rand_rat(g), d = rand_rat(g);
    Rational p = rand_rat(g);
    if ((c * p + d).is_zero()) continue;
    // f = a p + b, h = 1/(c p + d)
    const Jet<Rational> v = Jet<Rational>::variable(p);
    const Jet<Rational> f = Jet<Rational>(a) * v + Jet<Rational>(b);
    const Jet<Rational> h = Jet<Rational>(1) / (Jet<Rational>(c) * v + Jet<Rational>(d));
    const Jet<Rational> fh = f * h;
    const Rational den = c * p + d;
    const Rational fp = a, hp = -c / (den * den);
    CHECK(fh.value() == (a * p + b) / den);
    CHECK(fh.derivative() == fp / den + (a * p + b) * hp);
  }
}

TEST_CASE("mpoly arithmetic, evaluation and json") {
  const MPoly p = (X + MPoly(1)) * (X - MPoly(1)) + TAU * X;
  CHECK(p.str() == "-1 + x*tau + x^2");
  CHECK(p.evaluate({Rational(2), Rational(3), Rational(0), Rational(0)}) == Rational(9));
  const MPoly back = MPoly::from_json(p.to_json());
  CHECK(back == p);
  CHECK(p.to_json(0b11).dump() ==
        R"({"terms":[{"den":"1","exp":[0,0],"num":"-1"},{"den":"1","exp":[1,1],"num":"1"},{"den":"1","exp":[2,0],"num":"1"}],"vars":["x","tau"]})");
  CHECK(pow(X + MPoly(1), 3).coefficient({2, 0, 0, 0}) == Rational(3));
  CHECK(p.substitute(Var::Tau, X) == MPoly(-1) + pow(X, 2) * Rational(2));
}

TEST_CASE("coeff_extract examples") {
  const USeries u = USeries::monomial(1, 0, 1, MPoly(1));
  const USeries xs = USeries::constant(1, X);
  CHECK(coeff_extract(u + xs, {1}) == MPoly(1));
  CHECK(coeff_extract(u + xs, {0}) == X);
  const USeries one_minus_u2 = USeries::constant(1, MPoly(1)) + USeries::monomial(1, 0, 2, MPoly(-1));
  CHECK(coeff_extract((u + xs) * one_minus_u2, {0}) == X);
  CHECK(coeff_extract((u + xs) * one_minus_u2, {5}).is_zero());
}

TEST_CASE("coeff_extract is bilinear") {
  std::mt19937_64 g(3);
  auto rand_series = [&]() {
    USeries s(2);
    for (int k = 0; k < 4; ++k) {
      std::uniform_int_distribution<int> e(0, 2);
      s.add_term({e(g), e(g)}, X * rand_rat(g) + MPoly(rand_rat(g)));
    }
    return s;
  };
  for (int t = 0; t < 20; ++t) {
    const USeries p1 = rand_series(), p2 = rand_series(), q = rand_series();
    const Rational lam = rand_rat(g);
    USeries lp1(2);
    for (const auto& [e, c] : p1.terms()) lp1.add_term(e, c * lam);
    const std::vector<int> target{2, 3};
    CHECK(coeff_extract((lp1 + p2) * q, target) ==
          coeff_extract(p1 * q, target) * lam + coeff_extract(p2 * q, target));
  }
}

TEST_CASE("truncated series") {
  const MPoly c = X - TAU;
  auto s0 = truncated_geometric(c, 0);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0] == MPoly(1));
  auto s2 = truncated_geometric(c, 2);
  CHECK(s2[1] == TAU - X);
  CHECK(s2[2] == pow(c, 2));
  const MPoly cl = TAU - MPoly::variable(Var::Tau, -1);  // (tau^2 - 1)/tau
  auto s1 = truncated_inverse_power(cl, 1, 1);
  CHECK(s1[1] == MPoly::variable(Var::Tau, -1) - TAU);
  auto s3 = truncated_inverse_power(X, 3, 2);
  CHECK(s3[2] == pow(X, 2) * Rational(6));
}

TEST_CASE("laurent interpolation") {
  std::vector<std::pair<Rational, Rational>> samples;
  for (long z : {1L, 2L, 3L}) samples.emplace_back(Rational(z), bracket(Rational(z)));
  const auto f = interpolate_laurent(samples, -1, 1);
  CHECK(f.coeff(-1) == Rational(-1));
  CHECK(f.coeff(1) == Rational(1));
  CHECK(f.coeff(0).is_zero());
  CHECK(f.has_parity(1));

  std::vector<std::pair<Rational, Rational>> consts{{Rational(2), Rational(5)}, {Rational(3), Rational(5)}};
  const auto c = interpolate_laurent(consts, 0, 1);
  CHECK(c.low_degree() == 0);
  CHECK(c.high_degree() == 0);

  samples.emplace_back(Rational(4), Rational(100));
  CHECK_THROWS_AS(interpolate_laurent(samples, -1, 1), OverdeterminedError);

  std::mt19937_64 g(9);
  for (int t = 0; t < 20; ++t) {
    LaurentUPoly<Cyc12> p;
    for (int k = -3; k <= 2; ++k) p.set(k, rand_cyc(g));
    std::vector<std::pair<Cyc12, Cyc12>> pts;
    for (long z = 1; z <= 8; ++z) {
      const Cyc12 zz = Cyc12(Rational(z)) + Cyc12::zeta();
      pts.emplace_back(zz, p.evaluate(zz));
    }
    CHECK(interpolate_laurent(pts, -3, 2) == p);
  }
}
