#include "bqkz/tsasm.hpp"
#include "doctest.h"

using namespace bqkz;

namespace {

const MPoly t = MPoly::variable(Var::T);
const MPoly tau = MPoly::variable(Var::Tau);

const IntMatrix kFigure{
    {0, 0, 0, 0, 1, 0, 0, 0, 0},      {0, 0, 1, 0, -1, 0, 1, 0, 0},    {0, 1, -1, 0, 1, 0, -1, 1, 0},
    {0, 0, 0, 1, -1, 1, 0, 0, 0},     {1, -1, 1, -1, 1, -1, 1, -1, 1}, {0, 0, 0, 1, -1, 1, 0, 0, 0},
    {0, 1, -1, 0, 1, 0, -1, 1, 0},    {0, 0, 1, 0, -1, 0, 1, 0, 0},    {0, 0, 0, 0, 1, 0, 0, 0, 0},
};

}  // namespace

TEST_CASE("validation") {
  CHECK(validate_tsasm(kFigure));
  const IntMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(validate_asm(id));
  CHECK_FALSE(validate_tsasm(id));
  CHECK_FALSE(validate_asm(IntMatrix(3, std::vector<int>(3, 0))));
  CHECK_FALSE(validate_asm({{1, 0}, {0, 1}, {0, 0}}));
  CHECK(validate_tsasm({{1}}));
}

TEST_CASE("figure matrix round trip and weights") {
  const TsasmTriangle tri = TsasmTriangle::from_matrix(kFigure);
  CHECK(tri.reconstruct() == kFigure);
  CHECK(tri.mu() == 2);
  CHECK(tri.nu() == 1);
}

TEST_CASE("counts") {
  const auto& ref = tsasm_reference_counts();
  for (int m = 0; m <= 8; ++m) CHECK(count_tsasm(m) == ref[static_cast<std::size_t>(m)]);
}

TEST_CASE("size 9 triangles") {
  std::vector<MPoly> weights;
  enumerate_tsasm(4, [&](const TsasmTriangle& tr) {
    weights.push_back(MPoly::variable(Var::T, tr.mu()) * MPoly::variable(Var::Tau, tr.nu()));
  });
  CHECK(weights.size() == 4);
  CHECK(tsasm_genfun(4) == tau + pow(t, 2) * (MPoly(1) + tau + pow(tau, 2)));
}

TEST_CASE("generating functions") {
  CHECK(tsasm_genfun(0) == MPoly(1));
  CHECK(tsasm_genfun(2) == t);
  for (int m = 0; m <= 7; ++m) CHECK(tsasm_genfun(m) == tsasm_reference_genfun(m));
  for (int m = 0; m <= 8; ++m) CHECK(tsasm_genfun_dp(m) == tsasm_genfun(m));
  CHECK(tsasm_genfun(5).substitute(Var::T, Rational(1)).substitute(Var::Tau, Rational(1)) == MPoly(13));
  CHECK_THROWS(tsasm_reference_genfun(8));
}

TEST_CASE("tsasm suites at small sizes") {
  CHECK(check_tsasm_enumeration(7).pass());
  CHECK(check_shift_identity(5).pass());
  CHECK(check_conjecture_tsasm(6, 6).pass());
}
