#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <bqkz.h>

#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  bqkz_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error state") {
  CHECK(std::string(bqkz_version()).size() > 0);
  char* s = nullptr;
  CHECK(bqkz_energy(4, "1/0", 0, &s) != BQKZ_OK);
  CHECK(std::string(bqkz_last_error()).size() > 0);
  CHECK(bqkz_energy(4, "1", 0, &s) == BQKZ_OK);
  CHECK(std::string(bqkz_last_error()).empty());
  CHECK(json::parse(take(s))["E0"] == "-11/4");
  CHECK(bqkz_energy(4, "x", 0, &s) == BQKZ_ERR_INVALID_ARGUMENT);
  CHECK(bqkz_energy(0, "1", 0, &s) == BQKZ_ERR_INVALID_ARGUMENT);
  CHECK(bqkz_energy(4, "0", 0, &s) == BQKZ_ERR_DOMAIN);
}

TEST_CASE("component tables") {
  bqkz_table* t = nullptr;
  REQUIRE(bqkz_components(5, "general", 0, &t) == BQKZ_OK);
  CHECK(bqkz_table_sites(t) == 5);
  CHECK(bqkz_table_size(t) == 10);
  char* s = nullptr;
  REQUIRE(bqkz_table_json(t, &s) == BQKZ_OK);
  CHECK(json::parse(take(s))["display"]["2,4"] == "3 + 5*x + 3*x^2");
  REQUIRE(bqkz_table_evaluate(t, "1", &s) == BQKZ_OK);
  CHECK(json::parse(take(s))["2,4"] == "11");
  REQUIRE(bqkz_table_csv(t, &s) == BQKZ_OK);
  CHECK(take(s).find("2 4,3,5,3\n") != std::string::npos);
  bqkz_table_free(t);

  CHECK(bqkz_components(5, "nonsense", 0, &t) == BQKZ_ERR_INVALID_ARGUMENT);
  CHECK(bqkz_components(5, "tau1", 1, &t) == BQKZ_ERR_INVALID_ARGUMENT);
  CHECK(bqkz_components(5, "general", 0, nullptr) == BQKZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("scalar products, overlaps, tsasm") {
  char* s = nullptr;
  REQUIRE(bqkz_scalar_product(2, 0, &s) == BQKZ_OK);
  CHECK(json::parse(take(s))["F"] == "alpha + x");
  const int parts[] = {2, 3};
  REQUIRE(bqkz_overlap(parts, 2, "7/3", &s) == BQKZ_OK);
  CHECK(json::parse(take(s))["agree"] == true);
  REQUIRE(bqkz_tsasm(9, BQKZ_TSASM_COUNT, &s) == BQKZ_OK);
  CHECK(json::parse(take(s))["count"] == 13654);
  REQUIRE(bqkz_tsasm(5, BQKZ_TSASM_LIST, &s) == BQKZ_OK);
  CHECK(json::parse(take(s))["matrices"].size() == 13);
  CHECK(bqkz_tsasm(9, BQKZ_TSASM_LIST, &s) == BQKZ_ERR_INVALID_ARGUMENT);
  CHECK(bqkz_tsasm(3, 17, &s) == BQKZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("suites") {
  char* s = nullptr;
  REQUIRE(bqkz_list_suites(&s) == BQKZ_OK);
  CHECK(json::parse(take(s)).size() >= 20);
  int passed = 0;
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(bqkz_run_suite("bqkz", 3, 11, 2, 0, &passed, &a) == BQKZ_OK);
  CHECK(passed == 1);
  REQUIRE(bqkz_run_suite("bqkz", 3, 11, 2, 0, &passed, &b) == BQKZ_OK);
  CHECK(take(a) == take(b));
  CHECK(bqkz_run_suite("missing", -1, 7, 5, 0, &passed, &s) == BQKZ_ERR_UNKNOWN_SUITE);
  CHECK(bqkz_run_suite("bqkz", 3, 7, 0, 0, &passed, &s) == BQKZ_ERR_INVALID_ARGUMENT);
}
