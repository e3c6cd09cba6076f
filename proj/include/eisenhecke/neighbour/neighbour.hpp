#pragma once

#include <map>
#include <string>
#include <vector>

#include "eisenhecke/lattice/invariants.hpp"
#include "eisenhecke/neighbour/lines.hpp"

namespace eisen {

/// The sublattice L_x = {y in L : <x,y> in P} and the neighbours
/// L_x + Z[w] conj(pi)^{-1} x~ for the admissible lifts x~ of the line x.
/// All matrices are coordinates relative to the basis of L.
struct LineNeighbours {
    EisQMatrix intersection;
    std::vector<EisQMatrix> neighbours;
};

namespace detail {

struct LineData {
    std::vector<Eis64> x;     // lift of the line
    std::vector<uint32_t> r;  // <x, e_j> mod P
    size_t k = 0;             // pivot with r_k != 0
    Eis64 xx{0, 0};           // <x, x>
    Eis64 xk{0, 0};           // <x, e_k>
};

inline LineData line_data(const LineContext& ctx, const std::vector<uint32_t>& codes) {
    LineData d;
    d.x = ctx.lift(codes);
    d.r.assign(ctx.n, 0);
    std::vector<Eis64> row(ctx.n, Eis64{0, 0});
    for (size_t i = 0; i < ctx.n; ++i) {
        if (d.x[i].is_zero()) continue;
        Eis64 c = d.x[i].conj();
        for (size_t j = 0; j < ctx.n; ++j) row[j] += c * ctx.gram(i, j);
    }
    d.k = ctx.n;
    for (size_t j = 0; j < ctx.n; ++j) {
        d.r[j] = ctx.field.encode(row[j]);
        if (d.k == ctx.n && d.r[j] != 0) d.k = j;
        d.xx += row[j] * d.x[j];
    }
    if (d.k == ctx.n) throw InvariantViolation("neighbour", "line pairs trivially with L; is P coprime to the discriminant?");
    d.xk = row[d.k];
    return d;
}

/// Whether x~ = x + conj(pi) t e_k is an admissible lift.
inline bool lift_ok(const LineContext& ctx, const LineData& d, const Eis64& pi, const Eis64& t) {
    const Eis64 pib = pi.conj();
    const Eis64 z = pib * t;  // x~ = x + z e_k
    // <x, x~> = <x,x> + <x,e_k> z
    if (ctx.field.encode(d.xx + d.xk * z) != 0) return false;
    // <x~,x~> = <x,x> + 2 Re(<x,e_k> z) + N(z) g_kk
    Eis64 xz = d.xk * z;
    int64_t nn = d.xx.a + xz.trace() + z.norm() * ctx.gram(d.k, d.k).a;
    return nn % pi.norm() == 0;
}

}  // namespace detail

/// Number of admissible lifts of the line (= number of neighbours it carries).
inline size_t count_lifts(const LineContext& ctx, const std::vector<uint32_t>& codes) {
    auto d = detail::line_data(ctx, codes);
    Eis64 pi = to_small(ctx.prime.generator);
    size_t c = 0;
    for (uint32_t t = 0; t < ctx.field.q(); ++t)
        if (detail::lift_ok(ctx, d, pi, ctx.field.lift(t))) ++c;
    return c;
}

inline LineNeighbours neighbours_of_line(const LineContext& ctx, const std::vector<uint32_t>& codes) {
    const size_t n = ctx.n;
    auto d = detail::line_data(ctx, codes);
    const Eis64 pi = to_small(ctx.prime.generator);
    const EisInt pib = to_big(pi.conj());
    LineNeighbours out;
    // basis of L_x: e_j - lift(r_j / r_k) e_k (j != k), pi e_k
    EisMatrix c = EisMatrix::identity(n);
    uint32_t rk_inv = ctx.field.inv(d.r[d.k]);
    for (size_t j = 0; j < n; ++j) {
        if (j == d.k) continue;
        c(d.k, j) = -to_big(ctx.field.lift(ctx.field.mul(d.r[j], rk_inv)));
    }
    c(d.k, d.k) = to_big(pi);
    out.intersection = to_field(c);
    const EisQ pib_inv = inverse(to_field(pib));
    for (uint32_t t = 0; t < ctx.field.q(); ++t) {
        Eis64 tt = ctx.field.lift(t);
        if (!detail::lift_ok(ctx, d, pi, tt)) continue;
        // generators conj(pi) * L_x and x~, then divide by conj(pi)
        EisMatrix gens(n, n + 1);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) gens(i, j) = pib * c(i, j);
            gens(i, n) = to_big(d.x[i]);
        }
        gens(d.k, n) += pib * to_big(tt);
        EisMatrix b = column_basis(gens);
        if (b.cols() != n) throw InvariantViolation("neighbour", "neighbour generators have the wrong rank");
        out.neighbours.push_back(to_field(b).map([&](const EisQ& v) { return v * pib_inv; }));
    }
    return out;
}

/// The set N(L, P) with the deduplicated intersections L cap L'.
struct NeighbourSet {
    HermitianLattice base;
    EisIdeal prime;
    std::vector<HermitianLattice> neighbours;
    std::vector<HermitianLattice> intersections;
};

inline void check_neighbour_preconditions(const HermitianLattice& L, const EisIdeal& P) {
    if (!L.is_integral()) throw PreconditionError("neighbour", "lattice is not integral");
    if (!L.is_positive_definite()) throw PreconditionError("neighbour", "lattice is not positive definite");
    if (discriminant(L).exponents.count(P) || discriminant(L).exponents.count(P.conj()))
        throw PreconditionError("neighbour", "prime " + P.str() + " divides the discriminant");
}

/// Checks the defining quotient conditions of a neighbour exactly.
inline bool is_neighbour_pair(const HermitianLattice& L, const HermitianLattice& M, const HermitianLattice& Lp,
                              const EisIdeal& P) {
    return Lp.is_integral() && index_is_residue_field(L, M, P) && index_is_residue_field(Lp, M, P.conj());
}

inline std::string lattice_key(const HermitianLattice& L) {
    Integer d = common_denominator(L.basis());
    IntMatrix k = canonical_key(L.basis(), d);
    std::string s = d.get_str();
    for (const auto& v : k.data()) s += "," + v.get_str();
    return s;
}

/// The complete neighbour set, enumerated line by line and verified.
inline NeighbourSet neighbours(const HermitianLattice& L, const EisIdeal& P) {
    check_neighbour_preconditions(L, P);
    LineContext ctx(L.gram64(), P);
    NeighbourSet out{L, P, {}, {}};
    std::map<std::string, size_t> seen;
    for_each_line(ctx, [&](const std::vector<uint32_t>& codes) {
        if (!ctx.admissible(codes)) return;
        LineNeighbours ln = neighbours_of_line(ctx, codes);
        HermitianLattice M = L.with_coordinates(ln.intersection);
        out.intersections.push_back(M);
        for (const auto& c : ln.neighbours) {
            HermitianLattice Lp = L.with_coordinates(c);
            if (!is_neighbour_pair(L, M, Lp, P)) throw InvariantViolation("neighbour", "constructed lattice fails the neighbour conditions");
            if (seen.emplace(lattice_key(Lp), out.neighbours.size()).second) out.neighbours.push_back(Lp);
        }
    });
    return out;
}

struct NeighbourCount {
    uint64_t intersections = 0;
    uint64_t neighbours = 0;
};

/// Counts lines and lifts without building lattices.
inline NeighbourCount count_neighbours(const HermitianLattice& L, const EisIdeal& P) {
    check_neighbour_preconditions(L, P);
    LineContext ctx(L.gram64(), P);
    NeighbourCount c;
    for_each_line(ctx, [&](const std::vector<uint32_t>& codes) {
        if (!ctx.admissible(codes)) return;
        size_t k = count_lifts(ctx, codes);
        if (k == 0) return;
        ++c.intersections;
        c.neighbours += k;
    });
    return c;
}

}  // namespace eisen
