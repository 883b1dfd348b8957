#include <bqkz.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct Failure {
  int code;
};

// Owns a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  bqkz_string_free(s);
  return out;
}

void ok(bqkz_status st) {
  if (st == BQKZ_OK) return;
  std::cerr << "bqkz: " << bqkz_last_error() << '\n';
  throw Failure{st == BQKZ_ERR_INTERNAL ? 3 : 2};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "bqkz: cannot write " << path << '\n';
    throw Failure{2};
  }
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

using TablePtr = std::unique_ptr<bqkz_table, decltype(&bqkz_table_free)>;

TablePtr load_table(int n, const std::string& formula, bool symbolic) {
  bqkz_table* t = nullptr;
  ok(bqkz_components(n, formula.c_str(), symbolic ? 1 : 0, &t));
  return {t, &bqkz_table_free};
}

Json table_json(const bqkz_table* t) {
  char* s = nullptr;
  ok(bqkz_table_json(t, &s));
  return Json::parse(take(s));
}

std::string table_csv(const bqkz_table* t) {
  char* s = nullptr;
  ok(bqkz_table_csv(t, &s));
  return take(s);
}

struct GsOpts {
  int sites = 0;
  std::optional<std::string> x;
  std::string formula = "general";
  std::string out;
  bool csv = false;
  bool full = false;
};

int run_gs(const GsOpts& o) {
  const std::string formula = o.formula == "tau1" ? "general" : o.formula;
  auto one = load_table(o.sites, o.formula, false);
  if (o.csv) {
    std::string text = table_csv(one.get());
    if (!o.x && o.formula != "tau1") text += "\n" + table_csv(load_table(o.sites, formula, true).get());
    emit(text, o.out);
    return 0;
  }
  Json report{{"N", o.sites}, {"formula", o.formula}, {"version", bqkz_version()}};
  if (o.x) {
    char* s = nullptr;
    ok(bqkz_table_evaluate(one.get(), o.x->c_str(), &s));
    report["x"] = *o.x;
    report["components"] = Json::parse(take(s));
    report["tau_one"] = table_json(one.get())["display"];
  } else {
    const Json j1 = table_json(one.get());
    report["tau_one"] = j1["display"];
    if (o.formula != "tau1") {
      const Json jg = table_json(load_table(o.sites, formula, true).get());
      report["tau_general"] = jg["display"];
      if (o.full) report["tau_general_exact"] = jg["components"];
    }
    if (o.full) report["tau_one_exact"] = j1["components"];
  }
  emit(report.dump(2), o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary qKZ ground states, determinants and TSASM enumeration"};
  app.set_version_flag("--version", std::string(bqkz_version()));
  app.require_subcommand(1);

  GsOpts gs;
  auto* gs_cmd = app.add_subcommand("gs", "homogeneous ground-state components of psi_N");
  gs_cmd->add_option("--sites,-N", gs.sites, "number of sites N")->required()->check(CLI::Range(1, 24));
  gs_cmd->add_option("--x", gs.x, "evaluate at a rational x (p/q), tau = 1");
  gs_cmd->add_option("--formula", gs.formula, "general | tau1 | bar | tau_general")
      ->capture_default_str()
      ->check(CLI::IsMember({"general", "tau1", "bar", "tau_general"}));
  gs_cmd->add_option("--out,-o", gs.out, "output path (default stdout)");
  gs_cmd->add_flag("--csv", gs.csv, "CSV instead of JSON");
  gs_cmd->add_flag("--exact", gs.full, "include the structured polynomial encoding");

  int e_sites = 0;
  std::string e_x = "1", e_out;
  bool e_numeric = false;
  auto* energy_cmd = app.add_subcommand("energy", "exact ground-state energy E0");
  energy_cmd->add_option("--sites,-N", e_sites, "number of sites N")->required()->check(CLI::Range(2, 64));
  energy_cmd->add_option("--x", e_x, "rational x (p/q)")->capture_default_str();
  energy_cmd->add_flag("--numeric", e_numeric, "also diagonalise the sector Hamiltonian in double precision");
  energy_cmd->add_option("--out,-o", e_out, "output path");

  int s_sites = 0;
  bool s_general = false;
  std::string s_out;
  auto* scalar_cmd = app.add_subcommand("scalar", "scalar product F_N(x, alpha) as a determinant");
  scalar_cmd->add_option("--sites,-N", s_sites, "number of sites N")->required()->check(CLI::Range(1, 16));
  scalar_cmd->add_flag("--general-tau", s_general, "keep tau symbolic");
  scalar_cmd->add_option("--out,-o", s_out, "output path");

  std::vector<int> o_parts;
  std::string o_x = "1", o_out;
  auto* overlap_cmd = app.add_subcommand("overlap", "overlap of psi_N with a product of smaller ground states");
  overlap_cmd->add_option("--parts", o_parts, "composition N_1 ... N_m")->required()->expected(1, -1);
  overlap_cmd->add_option("--x", o_x, "rational x (p/q)")->capture_default_str();
  overlap_cmd->add_option("--out,-o", o_out, "output path");

  int t_m = 0;
  bool t_count = false, t_genfun = false, t_list = false;
  std::string t_out;
  auto* tsasm_cmd = app.add_subcommand("tsasm", "totally symmetric ASMs of size 2m+1");
  tsasm_cmd->add_option("--m", t_m, "half size m")->required()->check(CLI::Range(0, 12));
  auto* f_count = tsasm_cmd->add_flag("--count-only", t_count, "print the count only");
  auto* f_gen = tsasm_cmd->add_flag("--genfun", t_genfun, "generating function in t (mu) and tau (nu)");
  auto* f_list = tsasm_cmd->add_flag("--list", t_list, "list matrices with their weights (m <= 7)");
  f_count->excludes(f_gen)->excludes(f_list);
  f_gen->excludes(f_list);
  tsasm_cmd->add_option("--out,-o", t_out, "output path");

  std::string c_suite, c_out;
  int c_max = -1, c_trials = 5, c_sign = 0;
  unsigned long long c_seed = 7;
  bool c_list = false;
  auto* check_cmd = app.add_subcommand("check", "run a verification suite; exit 0 iff every asserted check passes");
  check_cmd->add_option("--suite", c_suite, "suite name or 'all'");
  check_cmd->add_option("--max-sites", c_max, "size bound (default: suite default)");
  check_cmd->add_option("--seed", c_seed, "random seed")->capture_default_str();
  check_cmd->add_option("--trials", c_trials, "random points per relation")->capture_default_str()->check(CLI::PositiveNumber);
  check_cmd->add_option("--betabar-sign", c_sign, "-1, 1, or 0 for both")->capture_default_str()->check(CLI::Range(-1, 1));
  check_cmd->add_option("--out,-o", c_out, "report path (default stdout)");
  check_cmd->add_flag("--list", c_list, "list suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gs_cmd) return run_gs(gs);

    if (*energy_cmd) {
      char* s = nullptr;
      ok(bqkz_energy(e_sites, e_x.c_str(), e_numeric ? 1 : 0, &s));
      emit(Json::parse(take(s)).dump(2), e_out);
      return 0;
    }

    if (*scalar_cmd) {
      char* s = nullptr;
      ok(bqkz_scalar_product(s_sites, s_general ? 1 : 0, &s));
      Json j = Json::parse(take(s));
      j.erase("poly");
      emit(j.dump(2), s_out);
      return 0;
    }

    if (*overlap_cmd) {
      char* s = nullptr;
      ok(bqkz_overlap(o_parts.data(), o_parts.size(), o_x.c_str(), &s));
      emit(Json::parse(take(s)).dump(2), o_out);
      return 0;
    }

    if (*tsasm_cmd) {
      const int mode = t_genfun ? BQKZ_TSASM_GENFUN : t_list ? BQKZ_TSASM_LIST : BQKZ_TSASM_COUNT;
      char* s = nullptr;
      ok(bqkz_tsasm(t_m, mode, &s));
      Json j = Json::parse(take(s));
      if (t_count) {
        emit(j["count"].dump(), t_out);
      } else {
        j.erase("poly");
        emit(j.dump(2), t_out);
      }
      return 0;
    }

    if (*check_cmd) {
      if (c_list) {
        char* s = nullptr;
        ok(bqkz_list_suites(&s));
        for (const auto& e : Json::parse(take(s)))
          std::cout << e["name"].get<std::string>() << "  (default " << e["default_max"] << ")  "
                    << e["summary"].get<std::string>() << '\n';
        return 0;
      }
      if (c_suite.empty()) {
        std::cerr << "bqkz: --suite is required\n";
        return 2;
      }
      int passed = 0;
      char* s = nullptr;
      ok(bqkz_run_suite(c_suite.c_str(), c_max, c_seed, c_trials, c_sign, &passed, &s));
      emit(take(s), c_out);
      std::cerr << c_suite << ": " << (passed ? "PASS" : "FAIL") << '\n';
      return passed ? 0 : 1;
    }
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "bqkz: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
