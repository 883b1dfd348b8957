#include "bqkz/cyclotomic.hpp"

#include <sstream>

namespace bqkz {

bool Cyc12::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool Cyc12::is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

Cyc12& Cyc12::operator+=(const Cyc12& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyc12& Cyc12::operator-=(const Cyc12& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyc12& Cyc12::operator*=(const Cyc12& o) {
  // Schoolbook product up to zeta^6, then reduce with zeta^4 = zeta^2 - 1,
  // zeta^5 = zeta^3 - zeta, zeta^6 = -1.
  std::array<Rational, 7> p{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (o.c_[j].is_zero()) continue;
      p[i + j] += c_[i] * o.c_[j];
    }
  }
  c_[0] = p[0] - p[4] - p[6];
  c_[1] = p[1] - p[5];
  c_[2] = p[2] + p[4];
  c_[3] = p[3] + p[5];
  return *this;
}

Cyc12 Cyc12::conjugate(int k) const {
  const Rational& a0 = c_[0];
  const Rational& a1 = c_[1];
  const Rational& a2 = c_[2];
  const Rational& a3 = c_[3];
  switch (k) {
    case 1:
      return *this;
    case 5:  // zeta -> zeta^3 - zeta, zeta^2 -> 1 - zeta^2, zeta^3 -> zeta^3
      return {a0 + a2, -a1, -a2, a1 + a3};
    case 7:  // zeta -> -zeta, zeta^3 -> -zeta^3
      return {a0, -a1, a2, -a3};
    case 11:  // zeta -> zeta - zeta^3, zeta^2 -> 1 - zeta^2, zeta^3 -> -zeta^3
      return {a0 + a2, a1, -a2, -a1 - a3};
    default:
      throw DomainError("Cyc12::conjugate: exponent must be 1, 5, 7 or 11");
  }
}

Rational Cyc12::norm() const {
  const Cyc12 n = *this * conjugate(5) * conjugate(7) * conjugate(11);
  if (!n.is_rational()) throw DomainError("Cyc12::norm: internal error, norm not rational");
  return n.c_[0];
}

Cyc12 Cyc12::inverse() const {
  if (is_zero()) throw DomainError("Cyc12: inverse of zero");
  const Cyc12 co = conjugate(5) * conjugate(7) * conjugate(11);
  const Cyc12 n = *this * co;
  if (!n.is_rational()) throw DomainError("Cyc12::inverse: internal error, norm not rational");
  const Rational inv = n.c_[0].inverse();
  return {co.c_[0] * inv, co.c_[1] * inv, co.c_[2] * inv, co.c_[3] * inv};
}

std::string Cyc12::str() const {
  static const char* const kBasis[4] = {"", "z", "z^2", "z^3"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < 4; ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k].str() << ")";
    if (k > 0) os << "*" << kBasis[k];
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace bqkz
