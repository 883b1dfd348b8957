#pragma once

#include <cstdint>

#include "bqkz/report.hpp"

namespace bqkz {

Report check_exchange(int n_max, std::uint64_t seed, int trials);
/// betabar_sign = +1 or -1 tests one branch, 0 tests both.
Report check_reflection(int n_max, std::uint64_t seed, int trials, int betabar_sign = 0);
Report check_bqkz(int n_max, std::uint64_t seed, int trials);
Report check_parity_inhomogeneous(int n_max, std::uint64_t seed, int trials);
Report check_psi_equals_psibar(int n_max, std::uint64_t seed, int trials);
/// Product formulas for the two special components and residue-order independence.
Report check_special_components(int n_max, std::uint64_t seed, int trials);
Report check_degrees_and_braid(int n_max, std::uint64_t seed);

}  // namespace bqkz
