#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bqkz/field.hpp"

namespace bqkz {

/// Raised when samples cannot be matched inside the declared degree window.
class OverdeterminedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in one variable over an exact field.
template <class F>
class LaurentUPoly {
 public:
  LaurentUPoly() = default;
  explicit LaurentUPoly(std::string var) : var_(std::move(var)) {}

  void set(int k, const F& c) {
    if (is_zero(c))
      coeffs_.erase(k);
    else
      coeffs_[k] = c;
  }
  [[nodiscard]] F coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? F(0) : it->second;
  }
  [[nodiscard]] const std::map<int, F>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero_poly() const { return coeffs_.empty(); }
  /// Lowest / highest exponent carrying a nonzero coefficient (requires nonzero).
  [[nodiscard]] int low_degree() const { return coeffs_.begin()->first; }
  [[nodiscard]] int high_degree() const { return coeffs_.rbegin()->first; }
  /// True when only exponents of the given parity (0 even, 1 odd) occur.
  [[nodiscard]] bool has_parity(int parity) const {
    for (const auto& [k, c] : coeffs_)
      if (((k % 2) + 2) % 2 != parity) return false;
    return true;
  }

  [[nodiscard]] F evaluate(const F& z) const {
    F sum(0);
    for (const auto& [k, c] : coeffs_) sum += c * power(z, k);
    return sum;
  }

  [[nodiscard]] std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")*" << var_ << "^" << k;
    }
    return os.str();
  }

  friend bool operator==(const LaurentUPoly& a, const LaurentUPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::string var_ = "z";
  std::map<int, F> coeffs_;
};

/// Reconstructs the unique Laurent polynomial with exponents in [lowdeg, highdeg]
/// through the samples. Extra samples are used as consistency checks; a
/// mismatch raises OverdeterminedError.
template <class F>
LaurentUPoly<F> interpolate_laurent(const std::vector<std::pair<F, F>>& samples, int lowdeg, int highdeg,
                                    const std::string& var = "z") {
  if (highdeg < lowdeg) throw DomainError("interpolate_laurent: empty degree window");
  const std::size_t need = static_cast<std::size_t>(highdeg - lowdeg + 1);
  if (samples.size() < need) throw DomainError("interpolate_laurent: not enough samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (is_zero(samples[i].first)) throw DomainError("interpolate_laurent: zero sample point");
    for (std::size_t j = 0; j < i; ++j)
      if (samples[i].first == samples[j].first) throw DomainError("interpolate_laurent: repeated sample point");
  }
  // g(z) = z^{-lowdeg} f(z) is an ordinary polynomial of degree < need.
  std::vector<F> xs(need);
  std::vector<F> dd(need);
  for (std::size_t i = 0; i < need; ++i) {
    xs[i] = samples[i].first;
    dd[i] = samples[i].second * power(xs[i], -lowdeg);
  }
  for (std::size_t level = 1; level < need; ++level)
    for (std::size_t i = need - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  // Newton form to monomial coefficients (Horner from the top).
  std::vector<F> poly(need, F(0));
  for (std::size_t step = need; step-- > 0;) {
    // poly <- poly * (z - xs[step]) + dd[step]
    std::vector<F> next(need, F(0));
    for (std::size_t k = 0; k + 1 < need; ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[step];
    }
    next[0] += dd[step];
    poly = std::move(next);
  }
  LaurentUPoly<F> out(var);
  for (std::size_t k = 0; k < need; ++k) out.set(static_cast<int>(k) + lowdeg, poly[k]);
  for (std::size_t i = need; i < samples.size(); ++i) {
    if (!(out.evaluate(samples[i].first) == samples[i].second)) {
      std::ostringstream os;
      os << "interpolate_laurent: sample " << i << " inconsistent with degree window [" << lowdeg << ", " << highdeg
         << "]";
      throw OverdeterminedError(os.str());
    }
  }
  return out;
}

}  // namespace bqkz
