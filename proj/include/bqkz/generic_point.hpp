#pragma once

#include <functional>
#include <vector>

#include "bqkz/lattice.hpp"
#include "bqkz/report.hpp"
#include "bqkz/sampling.hpp"

namespace bqkz {

/// Generic rational parameters with q = v^2, s = v^3 and
/// betabar = sign / (beta q), so s^4 = q^6 and betabar^2 beta^2 q^2 = 1.
struct GenericPoint {
  Rational v, q, s, beta, betabar;

  [[nodiscard]] BoundaryParams<Rational> params() const {
    return {q, s, beta * beta, betabar * betabar};
  }
  [[nodiscard]] nlohmann::json to_json() const {
    return {{"v", v.str()}, {"q", q.str()}, {"s", s.str()}, {"beta", beta.str()}, {"betabar", betabar.str()}};
  }
};

inline GenericPoint sample_generic_point(Sampler& smp, int betabar_sign = 1) {
  GenericPoint p;
  p.v = smp.generic_rational();
  p.q = p.v * p.v;
  p.s = p.q * p.v;
  p.beta = smp.generic_rational();
  p.betabar = Rational(betabar_sign) / (p.beta * p.q);
  return p;
}

inline std::vector<Rational> sample_points(Sampler& smp, int n) {
  std::vector<Rational> z;
  for (int i = 0; i < n; ++i) z.push_back(smp.generic_rational());
  return z;
}

template <class F>
nlohmann::json field_list_json(const std::vector<F>& xs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(to_str(x));
  return out;
}

/// Runs `body` until it completes without hitting a singular point.
/// Returns false if every attempt was singular.
inline bool with_resampling(const std::function<void()>& body, int attempts = 64) {
  for (int k = 0; k < attempts; ++k) {
    try {
      body();
      return true;
    } catch (const DomainError&) {
    }
  }
  return false;
}

}  // namespace bqkz
