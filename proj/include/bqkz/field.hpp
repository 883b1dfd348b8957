#pragma once

#include <string>
#include <type_traits>

#include "bqkz/cyclotomic.hpp"
#include "bqkz/jet.hpp"
#include "bqkz/rational.hpp"

namespace bqkz {

/// Compile-time description of the exact coefficient domains.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr const char* name = "Q";
  static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct FieldTraits<Cyc12> {
  static constexpr const char* name = "Q(zeta12)";
  static Cyc12 from_rational(const Rational& r) { return Cyc12(r); }
};

template <class B>
struct FieldTraits<Jet<B>> {
  static constexpr const char* name = "Jet";
  static Jet<B> from_rational(const Rational& r) { return Jet<B>(FieldTraits<B>::from_rational(r)); }
};

template <class F>
F from_rational(const Rational& r) {
  return FieldTraits<F>::from_rational(r);
}

template <class F>
bool is_zero(const F& v) {
  return v.is_zero();
}

/// Integer power; negative exponents invert (zero base then raises DomainError).
template <class F>
F power(const F& base, long e) {
  if (e < 0) {
    if (is_zero(base)) throw DomainError("negative power of zero");
    return power(F(1) / base, -e);
  }
  F result(1);
  F b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

/// The bracket [z] = z - 1/z.
template <class F>
F bracket(const F& z) {
  if (is_zero(z)) throw DomainError("bracket of zero");
  return z - F(1) / z;
}

/// Exact division with a readable error when the divisor vanishes.
template <class F>
F checked_div(const F& num, const F& den, const char* what) {
  if (is_zero(den)) throw DomainError(std::string("singular point: ") + what + " vanishes");
  return num / den;
}

}  // namespace bqkz
