#include <cmath>

#include "bqkz/spectra.hpp"
#include "doctest.h"

using namespace bqkz;

TEST_CASE("single-site Hamiltonian at x = 1") {
  const auto h = hamiltonian(combinatorial_params(1, Rational(1)));
  REQUIRE(h.dim() == 2);
  CHECK(h(0, 0) == Rational(-1, 2));
  CHECK(h(1, 1) == Rational(1, 2));
  CHECK(h(0, 1) == Rational(0));
  CHECK(h(1, 0) == Rational(0));
}

TEST_CASE("two-site Hamiltonian entries") {
  // x = 2: p = -3/4, pbar = 0.
  const auto h = hamiltonian(combinatorial_params(2, Rational(2)));
  CHECK(h(0, 0) == Rational(1, 4) + Rational(-3, 4));
  CHECK(h(1, 1) == Rational(-1, 4) + Rational(-3, 4));
  CHECK(h(2, 2) == Rational(-1, 4) + Rational(3, 4));
  CHECK(h(3, 3) == Rational(1, 4) + Rational(3, 4));
  CHECK(h(1, 2) == Rational(-1));
  CHECK(h(2, 1) == Rational(-1));
}

TEST_CASE("ground energy values") {
  CHECK(ground_energy(2, Rational(1)) == Rational(-5, 4));
  CHECK(ground_energy(5, Rational(2)) == Rational(-15, 4));
  CHECK(ground_energy(1, Rational(1)) == Rational(-1, 2));
  for (const Rational& x : {Rational(2), Rational(7, 3), Rational(-5, 4)})
    CHECK(ground_energy(7, x) == ground_energy(7, Rational(1) / x));
  CHECK_THROWS_AS(ground_energy(3, Rational(0)), DomainError);
  CHECK_THROWS_AS(combinatorial_params(3, Rational(0)), DomainError);
}

TEST_CASE("sector dimension") {
  CHECK(hamiltonian_sector(combinatorial_params(5, Rational(1)), 2).dim() == 10);
  CHECK(hamiltonian_sector(combinatorial_params(12, Rational(3)), 6).dim() == 924);
}

TEST_CASE("double sector matrix matches the exact one") {
  const Rational x(7, 3);
  const auto exact = hamiltonian_sector(combinatorial_params(6, x), 3);
  const auto approx = hamiltonian_sector_double(6, 3, x.to_double());
  for (std::size_t r = 0; r < exact.dim(); ++r)
    for (std::size_t c = 0; c < exact.dim(); ++c)
      CHECK(std::abs(exact(r, c).to_double() - approx[r * exact.dim() + c]) < 1e-14);
}

TEST_CASE("numeric ground state at N = 6, x = 1") {
  const Report r = check_numeric_ground(6, {1.0});
  CHECK(r.pass());
  CHECK(r.checks_run() > 0);
}

TEST_CASE("negative x is reported, not asserted") {
  const Report r = check_numeric_ground(4, {-2.0});
  CHECK(r.pass());
  const nlohmann::json j = r.to_json();
  const auto& neg = j["details"]["observations"]["negative-x"];
  REQUIRE(neg.size() == 4);
  CHECK(neg[3]["N"] == 4);
  CHECK(neg[3]["E0-in-spectrum"] == true);
  CHECK(neg[3]["E0-minimal"] == false);
}

TEST_CASE("spectra suites at small sizes") {
  CHECK(check_eigenpair(7, {Rational(1), Rational(7, 3), Rational(1, 5)}).pass());
  CHECK(check_hamiltonian_structure(6, {Rational(1), Rational(2), Rational(-3)}).pass());
  CHECK(check_numeric_ground(7, {0.1, 0.5, 2.0, 10.0}).pass());
  CHECK(check_transfer_eigen(3, 5, 11, 2).pass());
  CHECK(check_log_derivative(3, 11, 1).pass());
}
