#pragma once

#include <cstdint>

#include "bqkz/report.hpp"

namespace bqkz {

/// Local R/K identities: Yang-Baxter (plain and braid), unitarity, symmetry,
/// crossing, boundary Yang-Baxter and the K-trace identity.
Report check_lattice_identities(std::uint64_t seed, int trials);

/// Transfer-matrix structure: commutation, z -> -z, z -> 1/(qz),
/// scalar values at z^4 = 1, and compatibility of scattering operators.
Report check_transfer_structure(int n_max, std::uint64_t seed, int trials);

}  // namespace bqkz
