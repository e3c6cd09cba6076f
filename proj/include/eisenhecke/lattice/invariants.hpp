#pragma once

#include <vector>

#include "eisenhecke/lattice/hermitian_lattice.hpp"

namespace eisen {

/// Invariant factors I_1 | ... | I_n of L relative to M: there is a basis
/// e_i of M with L = sum I_i e_i. Returned as fractional ideals.
inline std::vector<FactoredIdeal> invariant_factors(const HermitianLattice& M, const HermitianLattice& L) {
    if (M.rank() != L.rank()) throw PreconditionError("lattice", "invariant factors need lattices of equal rank");
    if (M.rank() == 0) return {};
    EisQMatrix c = relative_coordinates(M, L);
    Integer d = common_denominator(c);
    EisMatrix ci = c.map([&](const EisQ& x) { return to_integral(x * EisQ(d, 0)); });
    std::vector<FactoredIdeal> out;
    FactoredIdeal den = factor_principal(EisInt{d, 0}).inverse();
    for (const auto& e : smith_diagonal(ci)) {
        if (e.is_zero()) throw InvariantViolation("lattice", "lattices do not span the same space");
        out.push_back(factor_principal(e) * den);
    }
    return out;
}

/// Discriminant: the product of the invariant factors of L inside L^#.
inline FactoredIdeal discriminant(const HermitianLattice& L) {
    FactoredIdeal r;
    for (const auto& f : invariant_factors(dual(L), L)) r *= f;
    return r;
}

/// Quotient-structure check for the neighbour relation: L/(L cap L') and
/// L'/(L cap L') are both cyclic of residue norm N(P).
inline bool index_is_residue_field(const HermitianLattice& L, const HermitianLattice& sub, const EisIdeal& P) {
    auto f = invariant_factors(L, sub);
    FactoredIdeal target;
    target.exponents[P] = 1;
    for (size_t i = 0; i + 1 < f.size(); ++i)
        if (!f[i].is_trivial()) return false;
    return !f.empty() && f.back() == target;
}

}  // namespace eisen
