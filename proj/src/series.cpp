#include "bqkz/series.hpp"

namespace bqkz {

USeries USeries::constant(int nvars, const MPoly& c) {
  USeries s(nvars);
  s.add_term(Key(static_cast<std::size_t>(nvars), 0), c);
  return s;
}

USeries USeries::monomial(int nvars, int k, int e, const MPoly& c) {
  if (k < 0 || k >= nvars || e < 0) throw DomainError("USeries::monomial: bad variable or exponent");
  Key key(static_cast<std::size_t>(nvars), 0);
  key[static_cast<std::size_t>(k)] = e;
  USeries s(nvars);
  s.add_term(key, c);
  return s;
}

void USeries::add_term(const Key& e, const MPoly& c) {
  if (static_cast<int>(e.size()) != nvars_) throw DomainError("USeries: exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

USeries USeries::multiply(const USeries& o, const std::vector<int>& caps) const {
  if (o.nvars_ != nvars_) throw DomainError("USeries: variable count mismatch");
  USeries r(nvars_);
  Key e(static_cast<std::size_t>(nvars_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      bool keep = true;
      for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] = ea[k] + eb[k];
        if (!caps.empty() && e[k] > caps[k]) keep = false;
      }
      if (keep) r.add_term(e, ca * cb);
    }
  }
  return r;
}

USeries operator+(const USeries& a, const USeries& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("USeries: variable count mismatch");
  USeries r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly coeff_extract(const USeries& p, const std::vector<int>& target) {
  if (static_cast<int>(target.size()) != p.nvars()) throw DomainError("coeff_extract: target length mismatch");
  auto it = p.terms().find(target);
  return it == p.terms().end() ? MPoly() : it->second;
}

std::vector<MPoly> truncated_geometric(const MPoly& c, int order) {
  return truncated_inverse_power(c, 1, order);
}

std::vector<MPoly> truncated_inverse_power(const MPoly& c, int power, int order) {
  if (order < 0) throw DomainError("truncated series: negative order");
  if (power < 0) throw DomainError("truncated series: negative power");
  std::vector<MPoly> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  MPoly cm(1);
  const MPoly minus_c = -c;
  for (int m = 0; m <= order; ++m) {
    // (1+cu)^{-p} = sum_m C(p+m-1, m) (-c)^m u^m
    const mpz_class b = power == 0 ? mpz_class(m == 0 ? 1 : 0) : binomial(power + m - 1, m);
    out.push_back(cm * Rational(b));
    cm *= minus_c;
  }
  return out;
}

}  // namespace bqkz
