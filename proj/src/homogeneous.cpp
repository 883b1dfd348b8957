#include "bqkz/homogeneous.hpp"

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bqkz {

namespace {

using i128 = __int128;

[[noreturn]] void overflow() { throw std::overflow_error("homogeneous: 128-bit coefficient overflow"); }
inline i128 cadd(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}
inline i128 cmul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

/// Dense polynomial in one variable (tau or tau^2), index = degree.
using TPoly = std::vector<i128>;

int tp_deg(const TPoly& p) {
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
    if (p[static_cast<std::size_t>(d)] != 0) return d;
  return -1;
}

TPoly tp_mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = cadd(r[i + j], cmul(a[i], b[j]));
  return r;
}

TPoly tp_add(const TPoly& a, const TPoly& b) {
  TPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = cadd(r[i], a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = cadd(r[i], b[i]);
  return r;
}

TPoly tp_at_one(const TPoly& a) {
  i128 s = 0;
  for (i128 c : a) s = cadd(s, c);
  return {s};
}

/// Univariate polynomial in u with TPoly coefficients.
using UPoly = std::vector<TPoly>;

UPoly up_mul(const UPoly& a, const UPoly& b, int cap) {
  UPoly r(static_cast<std::size_t>(cap + 1));
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= cap; ++i)
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= cap; ++j)
      r[i + j] = tp_add(r[i + j], tp_mul(a[i], b[j]));
  return r;
}

UPoly up_pow(const UPoly& a, int e, int cap) {
  UPoly r{TPoly{1}};
  for (int k = 0; k < e; ++k) r = up_mul(r, a, cap);
  return r;
}

/// (1 + c u)^{-power} through u^cap, c a TPoly.
UPoly up_inverse_power(const TPoly& c, int power, int cap) {
  UPoly r;
  TPoly cm{1};
  for (int m = 0; m <= cap; ++m) {
    const mpz_class b = binomial(power + m - 1, m);
    const i128 coef = (m % 2 == 0 ? 1 : -1) * static_cast<i128>(b.get_si());
    TPoly term = cm;
    for (auto& t : term) t = cmul(t, coef);
    r.push_back(term);
    cm = tp_mul(cm, c);
  }
  return r;
}

struct Term {
  std::vector<std::pair<int, int>> pw;  // (variable, exponent)
  TPoly c;
};
using Factor = std::vector<Term>;

/// Dense array of TPoly cells indexed by u-exponents 0..caps[k].
class Box {
 public:
  Box(std::vector<int> caps, int max_deg) : caps_(std::move(caps)), width_(static_cast<std::size_t>(max_deg) + 1) {
    stride_.assign(caps_.size(), 1);
    cells_ = 1;
    for (std::size_t k = caps_.size(); k-- > 0;) {
      stride_[k] = cells_;
      cells_ *= static_cast<std::size_t>(caps_[k] + 1);
    }
    data_.assign(cells_ * width_, 0);
    data_[0] = 1;
  }

  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] const std::vector<int>& caps() const { return caps_; }

  [[nodiscard]] const i128* cell(const std::vector<int>& e) const {
    std::size_t off = 0;
    for (std::size_t k = 0; k < caps_.size(); ++k) {
      if (e[k] < 0 || e[k] > caps_[k]) return nullptr;
      off += static_cast<std::size_t>(e[k]) * stride_[k];
    }
    return &data_[off * width_];
  }

  void multiply(const Factor& f) {
    std::vector<i128> out(data_.size(), 0);
    std::vector<int> e(caps_.size(), 0);
    struct Prepared {
      std::size_t delta;
      const Term* term;
    };
    std::vector<Prepared> prep;
    for (const auto& t : f) {
      std::size_t delta = 0;
      for (auto [k, p] : t.pw) delta += static_cast<std::size_t>(p) * stride_[static_cast<std::size_t>(k)];
      prep.push_back({delta, &t});
    }
    for (std::size_t idx = 0; idx < cells_; ++idx) {
      const i128* src = &data_[idx * width_];
      int hi = static_cast<int>(width_) - 1;
      while (hi >= 0 && src[hi] == 0) --hi;
      if (hi >= 0) {
        for (const auto& pr : prep) {
          bool fits = true;
          for (auto [k, p] : pr.term->pw)
            if (e[static_cast<std::size_t>(k)] + p > caps_[static_cast<std::size_t>(k)]) fits = false;
          if (!fits) continue;
          i128* dst = &out[(idx + pr.delta) * width_];
          const TPoly& c = pr.term->c;
          for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            if (static_cast<std::size_t>(hi) + j >= width_) throw std::logic_error("Box: tau degree bound exceeded");
            for (int d = 0; d <= hi; ++d)
              if (src[d] != 0) dst[static_cast<std::size_t>(d) + j] = cadd(dst[static_cast<std::size_t>(d) + j], cmul(src[d], c[j]));
          }
        }
      }
      for (std::size_t k = caps_.size(); k-- > 0;) {
        if (++e[k] <= caps_[k]) break;
        e[k] = 0;
      }
    }
    data_ = std::move(out);
  }

 private:
  std::vector<int> caps_;
  std::vector<std::size_t> stride_;
  std::size_t cells_ = 1;
  std::size_t width_;
  std::vector<i128> data_;
};

Factor univariate_factor(int k, const UPoly& p) {
  Factor f;
  for (std::size_t m = 0; m < p.size(); ++m)
    if (tp_deg(p[m]) >= 0) f.push_back({{{k, static_cast<int>(m)}}, p[m]});
  return f;
}

/// Builder collecting factors, with tau = 1 applied when requested.
struct FactorList {
  bool at_one;
  std::vector<Factor> factors;

  void add(Factor f) {
    if (at_one)
      for (auto& t : f) t.c = tp_at_one(t.c);
    factors.push_back(std::move(f));
  }
  [[nodiscard]] int degree_bound() const {
    int total = 0;
    for (const auto& f : factors) {
      int m = 0;
      for (const auto& t : f) m = std::max(m, tp_deg(t.c));
      total += m;
    }
    return total;
  }
};

/// Monomial helpers: c * u_i^p * u_j^q.
Term mono(TPoly c, std::vector<std::pair<int, int>> pw) {
  std::vector<std::pair<int, int>> clean;
  for (auto [k, p] : pw)
    if (p != 0) clean.emplace_back(k, p);
  return {std::move(clean), std::move(c)};
}

const TPoly kOne{1};
const TPoly kMinusOne{-1};
const TPoly kTau{0, 1};

/// Shared pair structure of the General and Bar formulas:
/// prod_{i<=j}(1 - u_i u_j) prod_{i<j}(u_j - u_i)(1 + tau u_j + u_i u_j)(tau + u_i + u_j).
void add_standard_pairs(FactorList& fl, int m) {
  for (int i = 0; i < m; ++i) {
    fl.add({mono(kOne, {}), mono(kMinusOne, {{i, 2}})});
    for (int j = i + 1; j < m; ++j) {
      fl.add({mono(kOne, {}), mono(kMinusOne, {{i, 1}, {j, 1}})});
      fl.add({mono(kOne, {{j, 1}}), mono(kMinusOne, {{i, 1}})});
      fl.add({mono(kOne, {}), mono(kTau, {{j, 1}}), mono(kOne, {{i, 1}, {j, 1}})});
      fl.add({mono(kTau, {}), mono(kOne, {{i, 1}}), mono(kOne, {{j, 1}})});
    }
  }
}

/// Dense accumulator over x^i tau^j, converted to an MPoly with a tau shift.
class Accumulator {
 public:
  void add(int xdeg, int tdeg, i128 c) {
    if (c == 0) return;
    auto& slot = terms_[{xdeg, tdeg}];
    slot = cadd(slot, c);
  }
  [[nodiscard]] MPoly to_mpoly(int tau_shift) const {
    MPoly p;
    for (const auto& [k, c] : terms_)
      if (c != 0) p.add_term(Exponent{k.first, k.second + tau_shift, 0, 0}, Rational::from_int128(c));
    return p;
  }

 private:
  std::map<std::pair<int, int>, i128> terms_;
};

std::vector<int> caps_for(int n_sites, int m) {
  std::vector<int> caps;
  for (int k = 0; k < m; ++k) caps.push_back(n_sites - m + k);
  return caps;
}

ComponentTable general_like(int N, TauMode mode, bool bar) {
  const bool one = mode == TauMode::One;
  const int n = N / 2;
  const int m = bar ? N - n : n;
  const auto caps = caps_for(N, m);
  FactorList fl{one, {}};
  const int ex = bar ? N + 1 - 2 * m : N - 2 * n;
  for (int k = 0; k < m; ++k) fl.add(univariate_factor(k, up_pow({kOne, kTau, kOne}, ex, caps[static_cast<std::size_t>(k)])));
  add_standard_pairs(fl, m);
  Box box(caps, fl.degree_bound());
  for (const auto& f : fl.factors) box.multiply(f);
  const std::size_t w = box.width();

  ComponentTable t(N, mode);
  for (const Positions& pos : increasing_tuples(N, m)) {
    std::vector<int> e(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) e[static_cast<std::size_t>(k)] = N - pos[static_cast<std::size_t>(m - 1 - k)];
    Accumulator acc;
    if (!bar) {
      // prod_k (u_k + x): subset S of u-factors, x^{n-|S|}.
      for (unsigned s = 0; s < (1u << m); ++s) {
        auto ee = e;
        for (int k = 0; k < m; ++k)
          if (s >> k & 1u) --ee[static_cast<std::size_t>(k)];
        const i128* c = box.cell(ee);
        if (!c) continue;
        const int xdeg = m - __builtin_popcount(s);
        for (std::size_t d = 0; d < w; ++d) acc.add(xdeg, static_cast<int>(d), c[d]);
      }
      t.set(pos, acc.to_mpoly(0));
    } else {
      // prod_k 1/(1 - (x - tau) u_k) = sum_d (x - tau)^{|d|} u^d.
      int total = 0;
      for (int v : e) total += v;
      std::vector<std::vector<i128>> by_order(static_cast<std::size_t>(total + 1), std::vector<i128>(w, 0));
      std::vector<int> d(static_cast<std::size_t>(m), 0);
      std::vector<int> ee(static_cast<std::size_t>(m));
      while (true) {
        int sum = 0;
        for (int k = 0; k < m; ++k) {
          ee[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(k)];
          sum += d[static_cast<std::size_t>(k)];
        }
        if (const i128* c = box.cell(ee))
          for (std::size_t j = 0; j < w; ++j) by_order[static_cast<std::size_t>(sum)][j] = cadd(by_order[static_cast<std::size_t>(sum)][j], c[j]);
        int k = m - 1;
        while (k >= 0 && ++d[static_cast<std::size_t>(k)] > e[static_cast<std::size_t>(k)]) d[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
      }
      for (int order = 0; order <= total; ++order) {
        const auto& sm = by_order[static_cast<std::size_t>(order)];
        // (x - tau)^order = sum_r C(order, r) x^r (-tau)^{order - r}
        for (int r = 0; r <= order; ++r) {
          const i128 b = static_cast<i128>(binomial(order, r).get_si()) * ((order - r) % 2 == 0 ? 1 : -1);
          const int tshift = one ? 0 : order - r;
          for (std::size_t j = 0; j < w; ++j)
            if (sm[j] != 0) acc.add(r, static_cast<int>(j) + tshift, cmul(b, sm[j]));
        }
      }
      t.set(complement_positions(pos, N), acc.to_mpoly(0));
    }
  }
  return t;
}

ComponentTable tau_one_formula(int N) {
  const int n = N / 2;
  const auto caps = caps_for(N, n);
  FactorList fl{true, {}};
  for (int k = 0; k < n; ++k) fl.add(univariate_factor(k, up_pow({kOne, kOne, kOne}, N - 2 * n, caps[static_cast<std::size_t>(k)])));
  for (int i = 0; i < n; ++i) {
    fl.add({mono(kOne, {}), mono(kMinusOne, {{i, 2}})});
    for (int j = i + 1; j < n; ++j) {
      fl.add({mono(kOne, {}), mono(kMinusOne, {{i, 1}, {j, 1}})});
      fl.add({mono(kOne, {{j, 1}}), mono(kMinusOne, {{i, 1}})});
      fl.add({mono(kOne, {}), mono(kOne, {{j, 1}}), mono(kOne, {{i, 1}, {j, 1}})});
      fl.add({mono(kOne, {}), mono(kOne, {{i, 1}}), mono(kOne, {{j, 1}})});
    }
  }
  Box box(caps, fl.degree_bound());
  for (const auto& f : fl.factors) box.multiply(f);
  ComponentTable t(N, TauMode::One);
  for (const Positions& a : increasing_tuples(N, n)) {
    Accumulator acc;
    for (unsigned s = 0; s < (1u << n); ++s) {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)] - 1 - static_cast<int>(s >> k & 1u);
      if (const i128* c = box.cell(e)) acc.add(__builtin_popcount(s), 0, c[0]);
    }
    t.set(a, acc.to_mpoly(0));
  }
  return t;
}

/// Rescaled by u = tau v so that the box is polynomial in T = tau^2.
ComponentTable tau_general_formula(int N, TauMode mode) {
  const bool one = mode == TauMode::One;
  const int n = N / 2;
  const auto caps = caps_for(N, n);
  const TPoly T{0, 1};               // tau^2
  const TPoly Tm1{-1, 1};            // tau^2 - 1
  const TPoly Tm2{-2, 1};            // tau^2 - 2
  const TPoly TTm1 = tp_mul(T, Tm1);  // tau^2 (tau^2 - 1)
  const TPoly TTm2 = tp_mul(T, Tm2);  // tau^2 (tau^2 - 2)
  FactorList fl{one, {}};
  for (int k = 0; k < n; ++k) {
    const int cap = caps[static_cast<std::size_t>(k)];
    UPoly g = up_mul({kOne, T}, {kOne, Tm2}, cap);
    g = up_mul(g, up_pow({kOne, T, T}, N - 2 * n, cap), cap);
    g = up_mul(g, up_inverse_power(Tm1, N, cap), cap);
    fl.add(univariate_factor(k, g));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      fl.add({mono(kOne, {{j, 1}}), mono(kMinusOne, {{i, 1}})});
      fl.add({mono(kOne, {}), mono(T, {{i, 1}}), mono(T, {{j, 1}}), mono(TTm1, {{i, 1}, {j, 1}})});
      fl.add({mono(kOne, {}), mono(T, {{j, 1}}), mono(T, {{i, 1}, {j, 1}})});
      fl.add({mono(kOne, {}), mono(Tm1, {{i, 1}}), mono(Tm1, {{j, 1}}), mono(TTm2, {{i, 1}, {j, 1}})});
    }
  Box box(caps, fl.degree_bound());
  for (const auto& f : fl.factors) box.multiply(f);
  const std::size_t w = box.width();
  ComponentTable t(N, mode);
  for (const Positions& a : increasing_tuples(N, n)) {
    int excess = 0;
    for (int v : a) excess += v - 1;
    const int shift = N * (N - 1) / 2 - n * N - excess + n * (n - 1) + n;
    Accumulator acc;
    for (unsigned s = 0; s < (1u << n); ++s) {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)] - 1 - static_cast<int>(s >> k & 1u);
      const i128* c = box.cell(e);
      if (!c) continue;
      // (1 + x tau v_k): x^{|S|} tau^{|S|}
      const int k = __builtin_popcount(s);
      for (std::size_t d = 0; d < w; ++d) acc.add(k, one ? 0 : 2 * static_cast<int>(d) + k, c[d]);
    }
    MPoly p = acc.to_mpoly(one ? 0 : shift);
    p.require_polynomial("tau-general component " + positions_key(a));
    t.set(a, std::move(p));
  }
  return t;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

const char* formula_name(Formula f) {
  switch (f) {
    case Formula::General: return "general";
    case Formula::TauOne: return "tau1";
    case Formula::Bar: return "bar";
    case Formula::TauGeneral: return "tau_general";
  }
  return "?";
}

Formula parse_formula(const std::string& name) {
  for (Formula f : {Formula::General, Formula::TauOne, Formula::Bar, Formula::TauGeneral})
    if (name == formula_name(f)) return f;
  throw ParseError("unknown formula '" + name + "'");
}

MPoly ComponentTable::at(const Positions& a) const {
  auto it = comps_.find(a);
  return it == comps_.end() ? MPoly() : it->second;
}

void ComponentTable::set(const Positions& a, MPoly value) {
  if (static_cast<int>(a.size()) != downs()) throw std::invalid_argument("ComponentTable: wrong number of down spins");
  comps_[a] = std::move(value);
}

ComponentTable ComponentTable::at_tau_one() const {
  ComponentTable t(n_sites_, TauMode::One);
  for (const auto& [a, p] : comps_) t.comps_[a] = p.substitute(Var::Tau, Rational(1));
  return t;
}

StateVector<Rational> ComponentTable::evaluate(const Rational& x, const Rational& tau) const {
  StateVector<Rational> v(std::size_t{1} << n_sites_, Rational(0));
  std::array<Rational, kNumVars> vals{x, tau, Rational(0), Rational(0)};
  for (const auto& [a, p] : comps_) v[index_of_down(a, n_sites_)] = p.evaluate(vals);
  return v;
}

nlohmann::json ComponentTable::to_json() const {
  nlohmann::json c = nlohmann::json::object();
  const unsigned mask = mode_ == TauMode::Symbolic ? 0b11u : 0b01u;
  for (const auto& [a, p] : comps_) c[positions_key(a)] = p.to_json(mask);
  return {{"N", n_sites_}, {"tau", mode_ == TauMode::Symbolic ? "symbolic" : "1"}, {"components", c}};
}

ComponentTable ComponentTable::from_json(const nlohmann::json& j) {
  ComponentTable t(j.at("N").get<int>(), j.at("tau").get<std::string>() == "symbolic" ? TauMode::Symbolic : TauMode::One);
  for (const auto& [key, val] : j.at("components").items()) {
    Positions a;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) a.push_back(std::stoi(part));
    t.set(a, MPoly::from_json(val));
  }
  return t;
}

ComponentTable components(int n_sites, Formula formula, TauMode mode) {
  if (n_sites < 1) throw std::invalid_argument("components: N must be at least 1");
  if (n_sites > 16) throw std::invalid_argument("components: N above 16 is not supported");
  switch (formula) {
    case Formula::General: return general_like(n_sites, mode, false);
    case Formula::Bar: return general_like(n_sites, mode, true);
    case Formula::TauOne:
      if (mode != TauMode::One) throw std::invalid_argument("components: the tau1 formula needs tau = 1");
      return tau_one_formula(n_sites);
    case Formula::TauGeneral:
      if (mode == TauMode::Symbolic && n_sites > 11)
        throw std::invalid_argument("components: symbolic tau_general exceeds 128-bit intermediates above N = 11");
      return tau_general_formula(n_sites, mode);
  }
  throw std::invalid_argument("components: unknown formula");
}

ComponentTable components_cached(int n_sites, Formula formula, TauMode mode) {
  const char* env = std::getenv("BQKZ_CACHE");
  const std::filesystem::path dir = env && *env ? env : "cache";
  std::ostringstream name;
  name << "psi_" << n_sites << "_" << formula_name(formula) << "_" << (mode == TauMode::Symbolic ? "sym" : "one") << ".json";
  const auto path = dir / name.str();
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    try {
      std::ifstream in(path);
      const auto j = nlohmann::json::parse(in);
      const std::string body = j.at("table").dump();
      if (j.at("version") == version_string() && j.at("checksum") == std::to_string(fnv1a(body)))
        return ComponentTable::from_json(j.at("table"));
    } catch (const std::exception&) {
      // unreadable or corrupt: recompute below
    }
  }
  ComponentTable t = components(n_sites, formula, mode);
  std::filesystem::create_directories(dir, ec);
  if (!ec) {
    const auto table = t.to_json();
    const nlohmann::json j{{"version", version_string()}, {"checksum", std::to_string(fnv1a(table.dump()))}, {"table", table}};
    std::ofstream out(path);
    if (out) out << j.dump();
  }
  return t;
}

MPoly sum_components(const ComponentTable& t) {
  MPoly s;
  for (const auto& [a, p] : t.components()) s += p;
  return s;
}

MPoly contract(const ComponentTable& t, const std::vector<CovectorBlock>& blocks) {
  int covered = 0;
  for (const auto& b : blocks) {
    if (b.sites < 1 || b.entries.size() != (std::size_t{1} << b.sites))
      throw std::invalid_argument("contract: malformed covector block");
    covered += b.sites;
  }
  if (covered != t.sites()) throw std::invalid_argument("contract: covector length differs from N");
  MPoly total;
  for (const auto& [a, p] : t.components()) {
    const std::uint64_t idx = index_of_down(a, t.sites());
    MPoly w = p;
    int pos = 0;
    for (const auto& b : blocks) {
      std::size_t local = 0;
      for (int k = 0; k < b.sites; ++k) local = (local << 1) | static_cast<std::size_t>(bit_at(idx, t.sites(), pos + k));
      pos += b.sites;
      if (b.entries[local].is_zero()) {
        w = MPoly();
        break;
      }
      w *= b.entries[local];
    }
    total += w;
  }
  return total;
}

std::vector<CovectorBlock> xi_covector(int n_sites, const MPoly& alpha) {
  std::vector<CovectorBlock> blocks;
  if (n_sites % 2 == 1) blocks.push_back({1, {MPoly(1), MPoly()}});
  for (int k = 0; k < n_sites / 2; ++k) blocks.push_back({2, {MPoly(), MPoly(1), alpha, MPoly()}});
  return blocks;
}

namespace {

MPoly normalisation_value(int N) {
  const int nb = N - N / 2;
  return MPoly::variable(Var::Tau, nb * (nb - 1) / 2);
}

}  // namespace

Report check_formula_agreement(int n_max) {
  Report rep("formula-agreement", n_max, 0, 1, "homogeneous-component-formulas-agree");
  for (int N = 1; N <= n_max; ++N) {
    const auto g = components_cached(N, Formula::General, TauMode::Symbolic);
    const auto b = components_cached(N, Formula::Bar, TauMode::Symbolic);
    const auto tg = components_cached(N, Formula::TauGeneral, TauMode::Symbolic);
    const auto t1 = components_cached(N, Formula::TauOne, TauMode::One);
    const nlohmann::json ctx{{"N", N}};
    rep.check("general-equals-bar", g == b, ctx);
    rep.check("general-equals-tau-general", g == tg, ctx);
    rep.check("general-at-tau-one-equals-tau1", g.at_tau_one() == t1, ctx);
    Positions first;
    for (int i = 1; i <= N / 2; ++i) first.push_back(i);
    rep.check("normalisation", g.at(first) == normalisation_value(N), ctx);
    rep.check("sector-size", g.components().size() == increasing_tuples(N, N / 2).size(), ctx);
  }
  return rep;
}

Report check_degrees_integrality(int n_max) {
  Report rep("degrees-integrality", n_max, 0, 1, "component-degree-bounds-and-integrality");
  for (int N = 1; N <= n_max; ++N) {
    const auto t = components_cached(N, Formula::TauOne, TauMode::One);
    const auto g = components_cached(N, Formula::General, TauMode::One);
    const int n = N / 2;
    rep.check("general-at-tau-one-equals-tau1", g == t, {{"N", N}});
    for (const auto& [a, p] : t.components()) {
      int m = 0;
      while (m < n && a[static_cast<std::size_t>(m)] == m + 1) ++m;
      const nlohmann::json ctx{{"N", N}, {"positions", positions_key(a)}};
      rep.check("x-degree-bound", p.degree(Var::X) <= n - m, ctx);
      rep.check("integer-coefficients", p.has_integer_coefficients() && p.is_polynomial(), ctx);
      rep.check("nonzero", !p.is_zero(), ctx);
    }
  }
  return rep;
}

Report check_parity_homogeneous(int n_max) {
  Report rep("parity-homogeneous", n_max, 0, 1, "parity-of-homogeneous-vector");
  nlohmann::json symbolic = nlohmann::json::object();
  for (int N = 1; N <= n_max; ++N) {
    const int n = N / 2;
    const auto reflect = [&](const Positions& a) {
      Positions r;
      for (auto it = a.rbegin(); it != a.rend(); ++it) r.push_back(N + 1 - *it);
      return r;
    };
    const auto x_reverse = [&](const MPoly& p) {
      // x^n p(1/x)
      return p.map_exponents([&](const Exponent& e) {
        Exponent r = e;
        r[0] = n - e[0];
        return r;
      });
    };
    const auto t = components_cached(N, Formula::TauOne, TauMode::One);
    for (const auto& [a, p] : t.components())
      rep.check("parity-tau-one", t.at(reflect(a)) == x_reverse(p), {{"N", N}, {"positions", positions_key(a)}});
    if (N <= 10) {
      const auto g = components_cached(N, Formula::General, TauMode::Symbolic);
      bool holds = true;
      for (const auto& [a, p] : g.components())
        if (!(g.at(reflect(a)) == x_reverse(p))) holds = false;
      symbolic[std::to_string(N)] = holds;
    }
  }
  rep.observe("parity-with-symbolic-tau", symbolic);
  return rep;
}

Report check_x0_spin_reversal(int n_max) {
  Report rep("x0-spin-reversal", n_max, 0, 1, "x-zero-equals-reversed-smaller-vector");
  for (int N = 2; N <= n_max; ++N) {
    const auto t = components_cached(N, Formula::General, TauMode::Symbolic);
    const auto s = components_cached(N - 1, Formula::General, TauMode::Symbolic);
    for (const auto& [a, p] : t.components()) {
      const MPoly at0 = p.substitute(Var::X, Rational(0));
      const nlohmann::json ctx{{"N", N}, {"positions", positions_key(a)}};
      if (a.back() == N) {
        rep.check("last-site-down-vanishes", at0.is_zero(), ctx);
        continue;
      }
      const MPoly rhs = s.at(complement_positions(a, N - 1)).substitute(Var::X, MPoly::variable(Var::Tau));
      rep.check("x0-equals-reversed", at0 == rhs, ctx);
    }
  }
  return rep;
}

Report check_nonnegativity(int n_max) {
  Report rep("nonnegativity", n_max, 0, 1, "component-coefficients-nonnegative");
  nlohmann::json negatives = nlohmann::json::array();
  for (int N = 1; N <= n_max; ++N) {
    const auto t = N <= 10 ? components_cached(N, Formula::General, TauMode::Symbolic)
                           : components_cached(N, Formula::TauOne, TauMode::One);
    for (const auto& [a, p] : t.components())
      if (!p.has_nonnegative_coefficients()) negatives.push_back({{"N", N}, {"positions", positions_key(a)}});
  }
  rep.observe("negative-coefficients", negatives);
  rep.observe("all-nonnegative", negatives.empty());
  return rep;
}

}  // namespace bqkz
