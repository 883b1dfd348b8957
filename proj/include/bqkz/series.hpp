#pragma once

#include <map>
#include <vector>

#include "bqkz/mpoly.hpp"

namespace bqkz {

/// Sparse polynomial in auxiliary variables u_1..u_k with MPoly coefficients.
class USeries {
 public:
  using Key = std::vector<int>;

  USeries() = default;
  explicit USeries(int nvars) : nvars_(nvars) {}

  /// The constant c.
  static USeries constant(int nvars, const MPoly& c);
  /// c * u_k^e.
  static USeries monomial(int nvars, int k, int e, const MPoly& c);

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] const std::map<Key, MPoly>& terms() const { return terms_; }
  void add_term(const Key& e, const MPoly& c);

  /// Product with all terms whose u_k exponent exceeds caps[k] dropped
  /// (empty caps keeps everything).
  [[nodiscard]] USeries multiply(const USeries& o, const std::vector<int>& caps = {}) const;

  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator*(const USeries& a, const USeries& b) { return a.multiply(b); }

 private:
  int nvars_ = 0;
  std::map<Key, MPoly> terms_;
};

/// Coefficient of prod_k u_k^{target_k} in p (zero polynomial if absent).
MPoly coeff_extract(const USeries& p, const std::vector<int>& target);

/// Coefficients [1, -c, c^2, ..., (-c)^order] of 1/(1 + c u).
std::vector<MPoly> truncated_geometric(const MPoly& c, int order);

/// Coefficients of (1 + c u)^{-power} through u^order.
std::vector<MPoly> truncated_inverse_power(const MPoly& c, int power, int order);

}  // namespace bqkz
