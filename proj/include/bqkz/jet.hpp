#pragma once

#include <ostream>

namespace bqkz {

/// First-order jet a + b*eps with eps^2 = 0 over an exact field F.
template <class F>
class Jet {
 public:
  Jet() = default;
  Jet(long v) : val_(v), der_(0) {}  // NOLINT(google-explicit-constructor)
  Jet(int v) : val_(static_cast<long>(v)), der_(0) {}  // NOLINT
  Jet(const F& v) : val_(v), der_(0) {}  // NOLINT
  Jet(F v, F d) : val_(std::move(v)), der_(std::move(d)) {}

  /// The active variable sitting at the point v.
  static Jet variable(const F& v) { return Jet(v, F(1)); }

  [[nodiscard]] const F& value() const { return val_; }
  [[nodiscard]] const F& derivative() const { return der_; }
  [[nodiscard]] bool is_zero() const { return val_.is_zero() && der_.is_zero(); }

  Jet& operator+=(const Jet& o) { val_ += o.val_; der_ += o.der_; return *this; }
  Jet& operator-=(const Jet& o) { val_ -= o.val_; der_ -= o.der_; return *this; }
  Jet& operator*=(const Jet& o) {
    der_ = val_ * o.der_ + der_ * o.val_;
    val_ *= o.val_;
    return *this;
  }
  Jet& operator/=(const Jet& o) { return *this *= o.inverse(); }

  /// Inverse; requires a nonzero value part.
  [[nodiscard]] Jet inverse() const {
    const F inv = F(1) / val_;
    return Jet(inv, -(der_ * inv * inv));
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend Jet operator-(const Jet& a) { return Jet(-a.val_, -a.der_); }
  friend bool operator==(const Jet& a, const Jet& b) { return a.val_ == b.val_ && a.der_ == b.der_; }
  friend std::ostream& operator<<(std::ostream& os, const Jet& a) {
    return os << "[" << a.val_ << " ; " << a.der_ << "]";
  }

 private:
  F val_{};
  F der_{};
};

}  // namespace bqkz
