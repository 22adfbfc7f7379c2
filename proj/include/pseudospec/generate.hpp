#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pseudospec/io.hpp"

namespace pseudospec {

/// Names accepted by generate().
std::vector<std::string> generator_families();

/**
 * Seeded test matrices for the three example families.
 *
 *  - tridiag_toeplitz (default n = 5): real tridiagonal Toeplitz, diagonal and
 *    superdiagonal uniform in [0, 1], subdiagonal uniform in [0, 5].
 *  - pentadiag_toeplitz (default n = 10): complex pentadiagonal Toeplitz; the
 *    main and upper diagonals draw real and imaginary parts from [0, 1], the
 *    lower diagonals from [0, 5].
 *  - hamiltonian_random (default n = 8, must be even): nearest Hamiltonian
 *    matrix to a real matrix with entries uniform in [0, 1].
 */
MatrixFile generate(const std::string& family, std::optional<int> n, std::uint64_t seed);

}  // namespace pseudospec
