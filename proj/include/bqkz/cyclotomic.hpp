#pragma once

#include <array>
#include <ostream>
#include <string>

#include "bqkz/rational.hpp"

namespace bqkz {

/// Element of Q(zeta) with zeta a primitive 12th root of unity.
///
/// Stored in the power basis 1, zeta, zeta^2, zeta^3 modulo zeta^4 = zeta^2 - 1.
class Cyc12 {
 public:
  Cyc12() = default;
  Cyc12(long v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Cyc12(int v) : Cyc12(static_cast<long>(v)) {}  // NOLINT
  Cyc12(const Rational& r) : c_{r, 0, 0, 0} {}  // NOLINT
  Cyc12(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Cyc12 zeta() { return {0, 1, 0, 0}; }
  /// Primitive cube root of unity zeta^4.
  static Cyc12 q_special() { return {-1, 0, 1, 0}; }
  /// Square root of -1, zeta^3.
  static Cyc12 imag_unit() { return {0, 0, 0, 1}; }

  [[nodiscard]] const Rational& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_rational() const;
  /// Image under zeta -> zeta^k for k in {1, 5, 7, 11}.
  [[nodiscard]] Cyc12 conjugate(int k) const;
  /// Field norm down to Q (product of the four conjugates).
  [[nodiscard]] Rational norm() const;
  [[nodiscard]] Cyc12 inverse() const;
  [[nodiscard]] std::string str() const;

  Cyc12& operator+=(const Cyc12& o);
  Cyc12& operator-=(const Cyc12& o);
  Cyc12& operator*=(const Cyc12& o);
  Cyc12& operator/=(const Cyc12& o) { return *this *= o.inverse(); }

  friend Cyc12 operator+(Cyc12 a, const Cyc12& b) { return a += b; }
  friend Cyc12 operator-(Cyc12 a, const Cyc12& b) { return a -= b; }
  friend Cyc12 operator*(Cyc12 a, const Cyc12& b) { return a *= b; }
  friend Cyc12 operator/(Cyc12 a, const Cyc12& b) { return a /= b; }
  friend Cyc12 operator-(const Cyc12& a) { return {-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]}; }
  friend bool operator==(const Cyc12& a, const Cyc12& b) { return a.c_ == b.c_; }
  friend std::ostream& operator<<(std::ostream& os, const Cyc12& a) { return os << a.str(); }

 private:
  std::array<Rational, 4> c_{};
};

}  // namespace bqkz
