#include "bqkz/mpoly.hpp"

#include <algorithm>
#include "json.hpp"
#include <sstream>

namespace bqkz {

namespace {

constexpr const char* kVarNames[kNumVars] = {"x", "tau", "alpha", "t"};

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int k = 0; k < kNumVars; ++k) r[k] = a[k] + b[k];
  return r;
}

}  // namespace

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

Var parse_var(const std::string& name) {
  for (int k = 0; k < kNumVars; ++k)
    if (name == kVarNames[k]) return static_cast<Var>(k);
  throw ParseError("unknown polynomial variable '" + name + "'");
}

MPoly::MPoly(long c) {
  if (c != 0) terms_.emplace(Exponent{}, Rational(c));
}

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

MPoly MPoly::variable(Var v, int power) {
  Exponent e{};
  e[static_cast<int>(v)] = power;
  return monomial(e, Rational(1));
}

MPoly MPoly::monomial(const Exponent& e, const Rational& c) {
  MPoly p;
  p.add_term(e, c);
  return p;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return std::all_of(t.first.begin(), t.first.end(), [](int e) { return e >= 0; });
  });
}

bool MPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

bool MPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.sign() >= 0; });
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

Rational MPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MPoly::used_vars() const {
  unsigned mask = 0;
  for (const auto& [e, c] : terms_)
    for (int k = 0; k < kNumVars; ++k)
      if (e[k] != 0) mask |= 1U << k;
  return mask;
}

int MPoly::degree(Var v) const {
  const int k = static_cast<int>(v);
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[k];
  for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
  return d;
}

int MPoly::low_degree(Var v) const {
  const int k = static_cast<int>(v);
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[k];
  for (const auto& [e, c] : terms_) d = std::min(d, e[k]);
  return d;
}

MPoly MPoly::coefficient_of(Var v, int power) const {
  const int k = static_cast<int>(v);
  MPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[k] != power) continue;
    Exponent e2 = e;
    e2[k] = 0;
    r.terms_.emplace(e2, c);
  }
  return r;
}

MPoly MPoly::substitute(Var v, const Rational& value) const {
  const int k = static_cast<int>(v);
  MPoly r;
  for (const auto& [e, c] : terms_) {
    Exponent e2 = e;
    e2[k] = 0;
    r.add_term(e2, e[k] == 0 ? c : c * bqkz::pow(value, e[k]));
  }
  return r;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  const int k = static_cast<int>(v);
  std::map<int, MPoly> powers;
  MPoly r;
  for (const auto& [e, c] : terms_) {
    Exponent e2 = e;
    e2[k] = 0;
    MPoly term = monomial(e2, c);
    if (e[k] != 0) {
      if (e[k] < 0) throw DomainError("MPoly::substitute: negative exponent with polynomial value");
      auto it = powers.find(e[k]);
      if (it == powers.end()) it = powers.emplace(e[k], bqkz::pow(value, e[k])).first;
      term = term * it->second;
    }
    r += term;
  }
  return r;
}

Rational MPoly::evaluate(const std::array<Rational, kNumVars>& values) const {
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < kNumVars; ++k)
      if (e[k] != 0) t *= bqkz::pow(values[k], e[k]);
    sum += t;
  }
  return sum;
}

MPoly MPoly::map_exponents(const std::function<Exponent(const Exponent&)>& f) const {
  MPoly r;
  for (const auto& [e, c] : terms_) r.add_term(f(e), c);
  return r;
}

void MPoly::require_polynomial(const std::string& context) const {
  if (!is_polynomial()) throw DomainError(context + ": negative exponent survived in " + str());
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly pow(const MPoly& p, int e) {
  if (e < 0) throw DomainError("MPoly power with negative exponent");
  MPoly r(1);
  MPoly b = p;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool is_const = e == Exponent{};
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!mag.is_one() || is_const) {
      os << mag.str();
      wrote = true;
    }
    for (int k = 0; k < kNumVars; ++k) {
      if (e[k] == 0) continue;
      if (wrote) os << "*";
      os << kVarNames[k];
      if (e[k] != 1) os << "^" << e[k];
      wrote = true;
    }
  }
  return os.str();
}

nlohmann::json MPoly::to_json(unsigned var_mask) const {
  if (var_mask == 0) var_mask = used_vars();
  std::vector<int> idx;
  nlohmann::json vars = nlohmann::json::array();
  for (int k = 0; k < kNumVars; ++k) {
    if (var_mask & (1U << k)) {
      idx.push_back(k);
      vars.push_back(kVarNames[k]);
    }
  }
  if ((used_vars() & ~var_mask) != 0) throw DomainError("MPoly::to_json: variable mask misses a used variable");
  // Order terms by the projected exponent tuple so the output is sorted in the
  // declared variables (the canonical map order agrees for any subset mask).
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::json ex = nlohmann::json::array();
    for (int k : idx) ex.push_back(e[k]);
    terms.push_back({{"exp", ex}, {"num", c.numerator().get_str()}, {"den", c.denominator().get_str()}});
  }
  return {{"vars", vars}, {"terms", terms}};
}

MPoly MPoly::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw ParseError("polynomial JSON needs 'vars' and 'terms'");
  std::vector<int> idx;
  for (const auto& v : j.at("vars")) idx.push_back(static_cast<int>(parse_var(v.get<std::string>())));
  MPoly p;
  for (const auto& t : j.at("terms")) {
    const auto& ex = t.at("exp");
    if (ex.size() != idx.size()) throw ParseError("polynomial JSON: exponent length mismatch");
    Exponent e{};
    for (std::size_t k = 0; k < idx.size(); ++k) e[idx[k]] = ex[k].get<int>();
    const Rational num = Rational::parse(t.at("num").get<std::string>());
    const Rational den = Rational::parse(t.at("den").get<std::string>());
    if (den.is_zero()) throw ParseError("polynomial JSON: zero denominator");
    p.add_term(e, num / den);
  }
  return p;
}

}  // namespace bqkz
