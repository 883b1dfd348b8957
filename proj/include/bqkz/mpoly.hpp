#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include "json.hpp"
#include <string>
#include <vector>

#include "bqkz/rational.hpp"

namespace bqkz {

/// Indeterminates known to the polynomial layer, in canonical order.
enum class Var : int { X = 0, Tau = 1, Alpha = 2, T = 3 };

inline constexpr int kNumVars = 4;
using Exponent = std::array<int, kNumVars>;

const char* var_name(Var v);
Var parse_var(const std::string& name);

/// Sparse multivariate polynomial over Q in x, tau, alpha, t.
///
/// Terms are kept in a lexicographically ordered map with no zero
/// coefficients. Negative exponents are representable so that Laurent
/// intermediates in tau can be carried; `is_polynomial` tells them apart.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(static_cast<long>(c)) {}  // NOLINT
  MPoly(const Rational& c);  // NOLINT

  static MPoly variable(Var v, int power = 1);
  static MPoly monomial(const Exponent& e, const Rational& c);

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_polynomial() const;
  [[nodiscard]] bool has_integer_coefficients() const;
  [[nodiscard]] bool has_nonnegative_coefficients() const;
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rational constant_term() const { return coefficient(Exponent{}); }
  [[nodiscard]] Rational coefficient(const Exponent& e) const;
  /// Bitmask of variables that occur with a nonzero exponent.
  [[nodiscard]] unsigned used_vars() const;

  /// Max (resp. min) exponent of v over all terms; 0 for the zero polynomial.
  [[nodiscard]] int degree(Var v) const;
  [[nodiscard]] int low_degree(Var v) const;
  /// Part of the polynomial carrying v^k, with v removed.
  [[nodiscard]] MPoly coefficient_of(Var v, int k) const;

  [[nodiscard]] MPoly substitute(Var v, const Rational& value) const;
  [[nodiscard]] MPoly substitute(Var v, const MPoly& value) const;
  /// Evaluates every variable; `values` is indexed by Var.
  [[nodiscard]] Rational evaluate(const std::array<Rational, kNumVars>& values) const;
  /// Applies an exponent transformation term by term (like terms are merged).
  [[nodiscard]] MPoly map_exponents(const std::function<Exponent(const Exponent&)>& f) const;
  /// Raises DomainError unless every exponent is non-negative.
  void require_polynomial(const std::string& context) const;

  [[nodiscard]] std::string str() const;
  /// JSON form {"vars":[...],"terms":[{"exp":[...],"num":"..","den":".."}]}.
  /// `vars` defaults to the variables that occur.
  [[nodiscard]] nlohmann::json to_json(unsigned var_mask = 0) const;
  static MPoly from_json(const nlohmann::json& j);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  void add_term(const Exponent& e, const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator-(const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

MPoly pow(const MPoly& p, int e);

}  // namespace bqkz
