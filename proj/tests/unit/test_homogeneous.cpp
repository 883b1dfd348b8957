#include "bqkz/homogeneous.hpp"
#include "doctest.h"

using namespace bqkz;

namespace {

const MPoly X = MPoly::variable(Var::X);
const MPoly T = MPoly::variable(Var::Tau);
MPoly c(long v) { return MPoly(v); }

}  // namespace

TEST_CASE("N = 5 symbolic table") {
  const std::map<Positions, MPoly> expected{
      {{1, 2}, pow(T, 3)},
      {{1, 3}, pow(T, 2) * (c(2) + pow(T, 2)) + X * pow(T, 3)},
      {{1, 4}, T * (c(2) + pow(T, 2)) + X * pow(T, 2) * (c(2) + pow(T, 2))},
      {{1, 5}, X * T * (c(2) + pow(T, 2))},
      {{2, 3}, T * (c(1) + pow(T, 2)) + c(2) * X * pow(T, 2) + pow(X, 2) * pow(T, 3)},
      {{2, 4}, c(1) + c(2) * pow(T, 2) + X * T * (c(3) + c(2) * pow(T, 2)) + pow(X, 2) * pow(T, 2) * (c(2) + pow(T, 2))},
      {{2, 5}, X * (c(1) + c(2) * pow(T, 2)) + pow(X, 2) * T * (c(2) + pow(T, 2))},
      {{3, 4}, T + X * (c(1) + pow(T, 2)) + pow(X, 2) * T * (c(1) + pow(T, 2))},
      {{3, 5}, X * T + pow(X, 2) * (c(1) + c(2) * pow(T, 2))},
      {{4, 5}, pow(X, 2) * T},
  };
  for (Formula f : {Formula::General, Formula::Bar, Formula::TauGeneral}) {
    const auto t = components(5, f, TauMode::Symbolic);
    INFO(formula_name(f));
    CHECK(t.components().size() == 10);
    for (const auto& [a, p] : expected) {
      INFO(positions_key(a) << " got " << t.at(a).str());
      CHECK(t.at(a) == p);
    }
  }
}

TEST_CASE("N = 5 at tau = 1") {
  const std::map<Positions, MPoly> expected{
      {{1, 2}, c(1)}, {{1, 3}, c(3) + X}, {{1, 4}, c(3) + c(3) * X}, {{1, 5}, c(3) * X},
      {{2, 3}, c(2) + c(2) * X + pow(X, 2)}, {{2, 4}, c(3) + c(5) * X + c(3) * pow(X, 2)},
      {{2, 5}, c(3) * X + c(3) * pow(X, 2)}, {{3, 4}, c(1) + c(2) * X + c(2) * pow(X, 2)},
      {{3, 5}, X + c(3) * pow(X, 2)}, {{4, 5}, pow(X, 2)},
  };
  for (Formula f : {Formula::TauOne, Formula::General, Formula::Bar, Formula::TauGeneral}) {
    const auto t = components(5, f, TauMode::One);
    INFO(formula_name(f));
    for (const auto& [a, p] : expected) CHECK(t.at(a) == p);
  }
}

TEST_CASE("small tables, sums and contractions") {
  const auto t1 = components(1, Formula::General, TauMode::Symbolic);
  CHECK(t1.at({}) == c(1));
  const auto t2 = components(2, Formula::General, TauMode::Symbolic);
  CHECK(t2.at({1}) == c(1));
  CHECK(t2.at({2}) == X);
  CHECK(sum_components(t2) == c(1) + X);
  const MPoly A = MPoly::variable(Var::Alpha);
  CHECK(contract(t2, xi_covector(2, A)) == A + X);
  CHECK(contract(t1, xi_covector(1, A)) == c(1));
  const auto t5 = components(5, Formula::TauOne, TauMode::One);
  const MPoly f5 = contract(t5, xi_covector(5, A));
  CHECK(f5 == t5.at({3, 5}) + (t5.at({2, 5}) + t5.at({3, 4})) * A + t5.at({2, 4}) * pow(A, 2));
  CHECK_THROWS_AS((void)components(4, Formula::TauOne, TauMode::Symbolic), std::invalid_argument);
}

TEST_CASE("json round trip") {
  const auto t = components(4, Formula::General, TauMode::Symbolic);
  CHECK(ComponentTable::from_json(t.to_json()) == t);
}

TEST_CASE("homogeneous suites") {
  for (const Report& r : {check_formula_agreement(7), check_degrees_integrality(8), check_parity_homogeneous(8),
                          check_x0_spin_reversal(7)}) {
    INFO(r.to_json().dump());
    CHECK(r.pass());
    CHECK(r.checks_run() > 0);
  }
  const auto nn = check_nonnegativity(7).to_json();
  CHECK(nn["details"]["observations"]["all-nonnegative"] == true);
}
