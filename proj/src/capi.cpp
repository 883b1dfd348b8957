#include "bqkz.h"

#include <Eigen/Eigenvalues>
#include <cstring>
#include <sstream>
#include <string>

#include "bqkz/combinatorics.hpp"
#include "bqkz/homogeneous.hpp"
#include "bqkz/spectra.hpp"
#include "bqkz/suites.hpp"
#include "bqkz/tsasm.hpp"

struct bqkz_table {
  bqkz::ComponentTable table;
};

namespace {

thread_local std::string g_last_error;

class ArgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class Fn>
bqkz_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BQKZ_OK;
  } catch (const UnknownSuite& e) {
    g_last_error = e.what();
    return BQKZ_ERR_UNKNOWN_SUITE;
  } catch (const bqkz::DomainError& e) {
    g_last_error = e.what();
    return BQKZ_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return BQKZ_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BQKZ_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return BQKZ_ERR_INTERNAL;
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ArgError(msg);
}

bqkz::Rational parse_rational(const char* s) {
  require(s != nullptr, "missing rational argument");
  return bqkz::Rational::parse(s);
}

bqkz::Rational at_x(const bqkz::MPoly& p, const bqkz::Rational& x) {
  return p.substitute(bqkz::Var::X, x).substitute(bqkz::Var::Tau, bqkz::Rational(1)).constant_term();
}

std::string join(const bqkz::Positions& a, char sep) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(a[i]);
  }
  return s;
}

nlohmann::json matrix_json(const bqkz::IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : m) rows.push_back(r);
  return rows;
}

}  // namespace

extern "C" {

void bqkz_string_free(char* s) { std::free(s); }

const char* bqkz_version(void) { return bqkz::version_string(); }

const char* bqkz_last_error(void) { return g_last_error.c_str(); }

bqkz_status bqkz_components(int n_sites, const char* formula, int symbolic, bqkz_table** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(n_sites >= 1, "n_sites must be positive");
    require(formula != nullptr, "missing formula name");
    const bqkz::Formula f = bqkz::parse_formula(formula);
    const bqkz::TauMode mode = symbolic ? bqkz::TauMode::Symbolic : bqkz::TauMode::One;
    require(!(symbolic && f == bqkz::Formula::TauOne), "formula tau1 has no symbolic form");
    *out = new bqkz_table{bqkz::components_cached(n_sites, f, mode)};
  });
}

void bqkz_table_free(bqkz_table* t) { delete t; }

int bqkz_table_sites(const bqkz_table* t) { return t ? t->table.sites() : 0; }

size_t bqkz_table_size(const bqkz_table* t) { return t ? t->table.components().size() : 0; }

bqkz_status bqkz_table_json(const bqkz_table* t, char** out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "null argument");
    nlohmann::json j = t->table.to_json();
    nlohmann::json text = nlohmann::json::object();
    for (const auto& [a, p] : t->table.components()) text[join(a, ',')] = p.str();
    j["display"] = std::move(text);
    *out = dup(j.dump());
  });
}

bqkz_status bqkz_table_csv(const bqkz_table* t, char** out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "null argument");
    std::ostringstream os;
    if (t->table.mode() == bqkz::TauMode::One) {
      int deg = 0;
      for (const auto& [a, p] : t->table.components()) deg = std::max(deg, p.degree(bqkz::Var::X));
      os << "positions";
      for (int k = 0; k <= deg; ++k) os << ",x^" << k;
      os << '\n';
      for (const auto& [a, p] : t->table.components()) {
        os << join(a, ' ');
        for (int k = 0; k <= deg; ++k) os << ',' << p.coefficient_of(bqkz::Var::X, k).constant_term();
        os << '\n';
      }
    } else {
      os << "positions,polynomial\n";
      for (const auto& [a, p] : t->table.components()) os << join(a, ' ') << ",\"" << p.str() << "\"\n";
    }
    *out = dup(os.str());
  });
}

bqkz_status bqkz_table_evaluate(const bqkz_table* t, const char* x, char** out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "null argument");
    const bqkz::Rational xv = parse_rational(x);
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [a, p] : t->table.components()) j[join(a, ',')] = at_x(p, xv).str();
    *out = dup(j.dump());
  });
}

bqkz_status bqkz_energy(int n_sites, const char* x, int numeric, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(n_sites >= 2, "n_sites must be at least 2");
    const bqkz::Rational xv = parse_rational(x);
    nlohmann::json j{{"N", n_sites}, {"x", xv.str()}, {"E0", bqkz::ground_energy(n_sites, xv).str()}};
    if (numeric) {
      require(n_sites <= 16, "numeric diagonalisation is limited to 16 sites");
      const int n_down = n_sites / 2;
      const auto flat = bqkz::hamiltonian_sector_double(n_sites, n_down, xv.to_double());
      const auto dim = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
      const Eigen::MatrixXd h =
          Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(flat.data(), dim, dim);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
      const auto& ev = es.eigenvalues();
      j["sector_down"] = n_down;
      j["lowest"] = ev(0);
      if (dim > 1) j["gap"] = ev(1) - ev(0);
      j["E0_double"] = xv.to_double() == 0.0 ? nlohmann::json(nullptr) : nlohmann::json(bqkz::ground_energy(n_sites, xv).to_double());
    }
    *out = dup(j.dump());
  });
}

bqkz_status bqkz_scalar_product(int n_sites, int general_tau, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(n_sites >= 1, "n_sites must be positive");
    const bqkz::MPoly f =
        bqkz::scalar_product_det(n_sites, general_tau ? bqkz::DetMode::TauGeneral : bqkz::DetMode::TauOne);
    *out = dup(nlohmann::json{{"N", n_sites}, {"F", f.str()}, {"poly", f.to_json()}}.dump());
  });
}

bqkz_status bqkz_overlap(const int* parts, size_t count, const char* x, char** out) {
  return guarded([&] {
    require(out != nullptr && (parts != nullptr || count == 0), "null argument");
    require(count > 0, "empty composition");
    std::vector<int> p(parts, parts + count);
    int n = 0;
    for (int v : p) {
      require(v >= 1, "parts must be positive");
      n += v;
    }
    const bqkz::Rational xv = parse_rational(x);
    const bqkz::Rational o = bqkz::overlap(p, xv);
    const auto odd = std::count_if(p.begin(), p.end(), [](int v) { return v % 2 == 1; });
    bqkz::Rational rhs(0);
    if (odd < 2) {
      rhs = at_x(bqkz::overlap_prefactor(n), xv);
      for (int v : p) rhs *= bqkz::Rational(bqkz::gamma_number(v));
    }
    *out = dup(nlohmann::json{{"N", n}, {"parts", p}, {"x", xv.str()}, {"overlap", o.str()},
                              {"conjectured", rhs.str()}, {"agree", o == rhs}}
                   .dump());
  });
}

bqkz_status bqkz_tsasm(int m, int mode, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(m >= 0, "m must be non-negative");
    nlohmann::json j{{"m", m}, {"size", 2 * m + 1}};
    switch (mode) {
      case BQKZ_TSASM_COUNT:
        j["count"] = bqkz::count_tsasm(m);
        break;
      case BQKZ_TSASM_GENFUN: {
        const bqkz::MPoly g = bqkz::tsasm_genfun_dp(m);
        j["genfun"] = g.str();
        j["poly"] = g.to_json();
        break;
      }
      case BQKZ_TSASM_LIST: {
        require(m <= 7, "listing is limited to m <= 7");
        nlohmann::json list = nlohmann::json::array();
        bqkz::enumerate_tsasm(m, [&](const bqkz::TsasmTriangle& tr) {
          list.push_back({{"mu", tr.mu()}, {"nu", tr.nu()}, {"matrix", matrix_json(tr.reconstruct())}});
        });
        j["count"] = list.size();
        j["matrices"] = std::move(list);
        break;
      }
      default:
        throw ArgError("unknown tsasm mode");
    }
    *out = dup(j.dump());
  });
}

bqkz_status bqkz_list_suites(char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : bqkz::suite_registry())
      j.push_back({{"name", s.name}, {"summary", s.summary}, {"default_max", s.default_max}});
    *out = dup(j.dump());
  });
}

bqkz_status bqkz_run_suite(const char* name, int max_sites, unsigned long long seed, int trials, int betabar_sign,
                           int* passed, char** report_json) {
  return guarded([&] {
    require(name != nullptr && passed != nullptr && report_json != nullptr, "null argument");
    require(trials >= 1, "trials must be positive");
    require(betabar_sign >= -1 && betabar_sign <= 1, "betabar sign must be -1, 0 or 1");
    const std::string n(name);
    if (n != "all" && bqkz::find_suite(n) == nullptr) throw UnknownSuite("unknown suite: " + n);
    bqkz::SuiteConfig cfg;
    cfg.max_sites = max_sites;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.betabar_sign = betabar_sign;
    const bqkz::Report r = bqkz::run_suite(n, cfg);
    *passed = r.pass() ? 1 : 0;
    *report_json = dup(r.to_json().dump(2));
  });
}

}  // extern "C"
