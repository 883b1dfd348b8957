#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "bqkz/mpoly.hpp"
#include "bqkz/operator.hpp"
#include "bqkz/report.hpp"

namespace bqkz {

/// Coefficient-extraction formulas for the homogeneous components.
enum class Formula { General, TauOne, Bar, TauGeneral };

const char* formula_name(Formula f);
Formula parse_formula(const std::string& name);

/// Symbolic: polynomials in (x, tau). One: tau set to 1, polynomials in x.
enum class TauMode { Symbolic, One };

/// psi_N as a map from down-spin positions to polynomials.
class ComponentTable {
 public:
  ComponentTable() = default;
  ComponentTable(int n_sites, TauMode mode) : n_sites_(n_sites), mode_(mode) {}

  [[nodiscard]] int sites() const { return n_sites_; }
  [[nodiscard]] int downs() const { return n_sites_ / 2; }
  [[nodiscard]] TauMode mode() const { return mode_; }
  [[nodiscard]] const std::map<Positions, MPoly>& components() const { return comps_; }
  /// Zero for tuples outside the table.
  [[nodiscard]] MPoly at(const Positions& a) const;
  void set(const Positions& a, MPoly value);

  /// Entry-wise substitution tau = 1.
  [[nodiscard]] ComponentTable at_tau_one() const;
  /// Full 2^N vector with x fixed to a rational (and tau = 1 in One mode).
  [[nodiscard]] StateVector<Rational> evaluate(const Rational& x, const Rational& tau = Rational(1)) const;

  [[nodiscard]] nlohmann::json to_json() const;
  static ComponentTable from_json(const nlohmann::json& j);

  friend bool operator==(const ComponentTable& a, const ComponentTable& b) {
    return a.n_sites_ == b.n_sites_ && a.mode_ == b.mode_ && a.comps_ == b.comps_;
  }

 private:
  int n_sites_ = 0;
  TauMode mode_ = TauMode::One;
  std::map<Positions, MPoly> comps_;
};

/// Components of psi_N from one formula. TauOne requires mode One.
ComponentTable components(int n_sites, Formula formula, TauMode mode);

/// Same as components(), backed by the on-disk cache in $BQKZ_CACHE (default ./cache).
ComponentTable components_cached(int n_sites, Formula formula, TauMode mode);

/// Sum of all components.
MPoly sum_components(const ComponentTable& t);

/// One factor of a product covector: `sites` consecutive sites, entries
/// indexed by the spin pattern on those sites (first site most significant).
struct CovectorBlock {
  int sites;
  std::vector<MPoly> entries;
};

/// Contraction of the product covector with psi_N; blocks cover all sites in order.
MPoly contract(const ComponentTable& t, const std::vector<CovectorBlock>& blocks);

/// <xi(alpha)| = <up down| + alpha <down up|, preceded by <up| for odd N.
std::vector<CovectorBlock> xi_covector(int n_sites, const MPoly& alpha);

/// Four-formula agreement, normalisation and sector length, symbolic tau.
Report check_formula_agreement(int n_max);
/// Degree bounds in x and integrality at tau = 1.
Report check_degrees_integrality(int n_max);
Report check_parity_homogeneous(int n_max);
Report check_x0_spin_reversal(int n_max);
/// Observation only: negative coefficients are recorded, never asserted.
Report check_nonnegativity(int n_max);

}  // namespace bqkz
