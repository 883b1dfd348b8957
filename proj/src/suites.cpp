#include "bqkz/suites.hpp"

#include <algorithm>

#include "bqkz/combinatorics.hpp"
#include "bqkz/homogeneous.hpp"
#include "bqkz/lattice_checks.hpp"
#include "bqkz/qkz_checks.hpp"
#include "bqkz/spectra.hpp"
#include "bqkz/tsasm.hpp"

namespace bqkz {

namespace {

std::vector<Rational> exact_grid() { return {Rational(1), Rational(2), Rational(7, 3), Rational(1, 5), Rational(10)}; }

std::vector<SuiteInfo> build_registry() {
  using C = const SuiteConfig&;
  return {
      {"lattice", "local R and K identities", 0, [](C c, int) { return check_lattice_identities(c.seed, c.trials); }},
      {"transfer-structure", "transfer commutation, symmetries, scalar values at z^4 = 1", 3,
       [](C c, int n) { return check_transfer_structure(n, c.seed, c.trials); }},
      {"exchange", "exchange relations of Psi and Psibar", 6,
       [](C c, int n) { return check_exchange(n, c.seed, c.trials); }},
      {"reflection", "boundary reflection relations", 6,
       [](C c, int n) { return check_reflection(n, c.seed, c.trials, c.betabar_sign); }},
      {"bqkz", "boundary qKZ equations", 5, [](C c, int n) { return check_bqkz(n, c.seed, c.trials); }},
      {"parity", "spin-reversal parity of the inhomogeneous vectors", 6,
       [](C c, int n) { return check_parity_inhomogeneous(n, c.seed, c.trials); }},
      {"psi-psibar", "Psi and Psibar agree at the constrained point", 6,
       [](C c, int n) { return check_psi_equals_psibar(n, c.seed, c.trials); }},
      {"special-components", "closed-form extreme components", 6,
       [](C c, int n) { return check_special_components(n, c.seed, c.trials); }},
      {"degrees", "z_i degrees, parities and braid limits", 5,
       [](C c, int n) { return check_degrees_and_braid(n, c.seed); }},
      {"eigenpair", "exact eigenpair of the Hamiltonian", 12,
       [](C, int n) { return check_eigenpair(n, exact_grid()); }},
      {"numeric-ground", "numeric ground state and gap (x < 0 observed)", 12,
       [](C, int n) { return check_numeric_ground(n, {0.1, 0.5, 1.0, 2.0, 10.0, -2.0}); }},
      {"hamiltonian-structure", "sector Hamiltonian structure", 8,
       [](C, int n) { return check_hamiltonian_structure(n, {Rational(1), Rational(2), Rational(1, 5), Rational(-2)}); }},
      {"transfer", "transfer-matrix eigenvalue, inhomogeneous and homogeneous", 8,
       [](C c, int n) { return check_transfer_eigen(std::min(n, 4), n, c.seed, c.trials); }},
      {"log-derivative", "logarithmic derivative of the homogeneous transfer matrix", 6,
       [](C c, int n) { return check_log_derivative(n, c.seed, std::max(1, c.trials / 2)); }},
      {"formula-agreement", "four component formulas agree", 10, [](C, int n) { return check_formula_agreement(n); }},
      {"degrees-integrality", "x-degree bounds and integrality", 12,
       [](C, int n) { return check_degrees_integrality(n); }},
      {"parity-homogeneous", "parity of the homogeneous components", 12,
       [](C, int n) { return check_parity_homogeneous(n); }},
      {"x0-spin-reversal", "psi_N at x = 0 from psi_{N-1} at x = tau", 10,
       [](C, int n) { return check_x0_spin_reversal(n); }},
      {"nonnegativity", "coefficient signs (observed only)", 10, [](C, int n) { return check_nonnegativity(n); }},
      {"scalar-products", "determinant formula for F_N", 12, [](C, int n) { return check_scalar_products(n); }},
      {"general-tau-scalar", "general-tau determinants and f polynomials", 10,
       [](C, int n) { return check_general_tau_scalar(n); }},
      {"alternating-components", "alternating components as determinants", 12,
       [](C, int n) { return check_alternating_components(n, 8); }},
      {"susy", "identities at x = 1", 11, [](C, int n) { return check_susy_identities((n - 1) / 2); }},
      {"conjecture-overlaps", "overlap factorisation over compositions", 10,
       [](C, int n) { return check_conjecture_overlaps(n, {Rational(2), Rational(7, 3), Rational(1, 5)}); }},
      {"tsasm-enumeration", "TSASM counts and generating functions (bound is m)", 9,
       [](C, int n) { return check_tsasm_enumeration(n); }},
      {"tsasm-shift", "shift identity of the TSASM generating function", 7,
       [](C, int n) { return check_shift_identity(n); }},
      {"conjecture-tsasm", "component sums against weighted TSASM enumeration", 8,
       [](C, int n) { return check_conjecture_tsasm(n, n); }},
  };
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> registry = build_registry();
  return registry;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return &s;
  return nullptr;
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "all") {
    Report all("all", config.max_sites, config.seed, config.trials, "full verification matrix");
    nlohmann::json per = nlohmann::json::object();
    for (const auto& s : suite_registry()) {
      const Report r = s.run(config, s.default_max);
      per[s.name] = r.pass();
      all.merge(r);
    }
    all.set_detail("suites", per);
    return all;
  }
  const SuiteInfo* s = find_suite(name);
  if (s == nullptr) throw std::invalid_argument("unknown suite: " + name);
  const int n = config.max_sites >= 0 ? config.max_sites : s->default_max;
  return s->run(config, n);
}

}  // namespace bqkz
