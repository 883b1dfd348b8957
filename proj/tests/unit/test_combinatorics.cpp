#include "bqkz/combinatorics.hpp"
#include "bqkz/sampling.hpp"
#include "doctest.h"

using namespace bqkz;

namespace {

const MPoly X = MPoly::variable(Var::X);
const MPoly A = MPoly::variable(Var::Alpha);
const MPoly T = MPoly::variable(Var::Tau);

MPoly random_poly(Sampler& smp) {
  MPoly p;
  for (int k = 0; k < 3; ++k)
    p += MPoly::variable(Var::X, static_cast<int>(smp.range(0, 2))) *
         MPoly::variable(Var::Alpha, static_cast<int>(smp.range(0, 1))) * Rational(smp.range(-4, 4));
  return p;
}

}  // namespace

TEST_CASE("f polynomials") {
  CHECK(f_poly(1, 1, 0).is_zero());
  CHECK(f_poly(1, 1, -1) == MPoly(1));
  // f^0_{2,1} = tau^3 C(1, 3) + ... = 0 and f^{-1}_{2,2} = tau^0 C(1,0)C(1,0) + tau^2 C(1,1)C(1,1).
  CHECK(f_poly(2, 1, 0).is_zero());
  CHECK(f_poly(2, 2, -1) == MPoly(1) + pow(T, 2));
  CHECK_THROWS(f_poly(0, 1, 0));
}

TEST_CASE("subset determinant agrees with the permutation sum") {
  Sampler smp(5);
  for (int n = 0; n <= 5; ++n)
    for (int t = 0; t < 3; ++t) {
      PolyMatrix m(static_cast<std::size_t>(n), std::vector<MPoly>(static_cast<std::size_t>(n)));
      for (auto& row : m)
        for (auto& e : row) e = random_poly(smp);
      CHECK(determinant(m) == determinant_leibniz(m));
    }
  CHECK(determinant({}) == MPoly(1));
  CHECK_THROWS(determinant({{MPoly(1), MPoly(2)}}));
}

TEST_CASE("small scalar products") {
  CHECK(scalar_product_det(1, DetMode::TauOne) == MPoly(1));
  CHECK(scalar_product_det(2, DetMode::TauOne) == A + X);
  CHECK(scalar_product_det(3, DetMode::TauOne) == A * X + A + X);
  CHECK(scalar_product_det(2, DetMode::TauGeneral) == A + X);
}

TEST_CASE("F_5 from the component table") {
  const auto t = components(5, Formula::TauOne, TauMode::One);
  const MPoly expected = t.at({3, 5}) + (t.at({2, 5}) + t.at({3, 4})) * A + t.at({2, 4}) * pow(A, 2);
  CHECK(scalar_product_det(5, DetMode::TauOne) == expected);
  CHECK(scalar_product_eps_sum(t, A) == expected);
}

TEST_CASE("alternating components") {
  CHECK(alternating_component_det(2) == X);
  CHECK(alternating_component_det(5) == MPoly(3) + X * Rational(5) + pow(X, 2) * Rational(3));
  CHECK(alternating_positions(5) == Positions{2, 4});
}

TEST_CASE("product numbers") {
  CHECK(av_number(1) == 1);
  CHECK(av_number(2) == 3);
  CHECK(av_number(3) == 26);
  CHECK(av_number(4) == 646);
  CHECK(n8_number(1) == 1);
  CHECK(n8_number(2) == 2);
  CHECK(n8_number(3) == 11);
  CHECK(n8_number(4) == 170);
  CHECK(gamma_number(4) == 3);
  CHECK(gamma_number(5) == 11);
}

TEST_CASE("overlaps") {
  CHECK(overlap({1, 1}, Rational(3)).is_zero());
  CHECK(overlap({3, 3}, Rational(2)).is_zero());
  // gamma_2 = A_V(3) = 1, so O_{2,2}(1) = F_4(1, 1) = 11.
  CHECK(overlap({2, 2}, Rational(1)) == Rational(11));
  CHECK(overlap({5}, Rational(1)) == Rational(286));
  CHECK(overlap({3, 1}, Rational(7, 3)) == overlap({1, 3}, Rational(7, 3)));
  const auto t = components(5, Formula::TauOne, TauMode::One).evaluate(Rational(2));
  Rational norm(0);
  for (const auto& c : t) norm += c * c;
  CHECK(overlap({5}, Rational(2)) == norm);
  CHECK_THROWS(overlap({}, Rational(1)));
}

TEST_CASE("overlap prefactor at N = 2") {
  // x (x + 1/x) = x^2 + 1.
  CHECK(overlap_prefactor(2) == pow(X, 2) + MPoly(1));
}

TEST_CASE("combinatorics suites at small sizes") {
  CHECK(check_scalar_products(8).pass());
  CHECK(check_general_tau_scalar(7).pass());
  CHECK(check_alternating_components(8, 5).pass());
  CHECK(check_susy_identities(3).pass());
  CHECK(check_conjecture_overlaps(7, {Rational(2), Rational(1, 3)}).pass());
}
