#pragma once

#include <array>
#include <vector>

#include "eisenhecke/lattice/hermitian_lattice.hpp"

namespace eisen {

/// Generator matrix [I_6 | A] of the extended ternary Golay code.
inline const std::array<std::array<int, 12>, 6>& ternary_golay_generator() {
    static const std::array<std::array<int, 12>, 6> g = {{
        {1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
        {0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2, 1},
        {0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2},
        {0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 2},
        {0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0, 1},
        {0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0},
    }};
    return g;
}

/// The rank-12 lattice {x in Z[w]^12 : x mod sqrt(-3) lies in the ternary
/// Golay code}, in the standard Hermitian space. It is sqrt(-3)-modular.
inline HermitianLattice golay_sqrt3_lattice() {
    const auto& g = ternary_golay_generator();
    EisQMatrix b(12, 12);
    for (size_t j = 0; j < 6; ++j)
        for (size_t i = 0; i < 12; ++i) b(i, j) = EisQ(g[j][i], 0);
    for (size_t j = 6; j < 12; ++j) b(j, j) = to_field(sqrt_minus3());
    return {EisQMatrix::identity(12), b};
}

}  // namespace eisen
