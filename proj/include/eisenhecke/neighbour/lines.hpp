#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "eisenhecke/lattice/reduction.hpp"
#include "eisenhecke/neighbour/residue_field.hpp"

namespace eisen {

/// Data shared by all line computations for a lattice L (given by its Gram
/// matrix) and a prime P. Lines live in L / conj(P) L; pairings are read mod P.
struct LineContext {
    Eis64Matrix gram;
    EisIdeal prime;
    ResidueField field;      // Z[w]/P
    ResidueField bar_field;  // Z[w]/conj(P), coordinates of lines
    size_t n;

    LineContext(const Eis64Matrix& g, const EisIdeal& P)
        : gram(g), prime(P), field(P), bar_field(P.conj()), n(g.rows()) {}

    std::vector<Eis64> lift(const std::vector<uint32_t>& codes) const {
        std::vector<Eis64> x(n);
        for (size_t i = 0; i < n; ++i) x[i] = bar_field.lift(codes[i]);
        return x;
    }

    Eis64 pair(const std::vector<Eis64>& x, const std::vector<Eis64>& y) const {
        Eis64 s{0, 0};
        for (size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            Eis64 r{0, 0};
            for (size_t j = 0; j < n; ++j)
                if (!y[j].is_zero()) r += gram(i, j) * y[j];
            s += x[i].conj() * r;
        }
        return s;
    }

    /// A line carries at least one neighbour iff <x,x> lies in P (split primes:
    /// always).
    bool admissible(const std::vector<uint32_t>& codes) const {
        if (prime.split_type == SplitType::split) return true;
        auto x = lift(codes);
        return field.encode(pair(x, x)) == 0;
    }
};

/// Packed arithmetic on F_4^n with 2 bits per coordinate (bit 0: 1, bit 1: w).
namespace f4 {

constexpr uint64_t low_bits(size_t n) {
    uint64_t m = 0;
    for (size_t i = 0; i < n; ++i) m |= uint64_t{1} << (2 * i);
    return m;
}

inline uint64_t times_omega(uint64_t x, uint64_t lo) {
    uint64_t a = x & lo, b = (x >> 1) & lo;
    return b | ((a ^ b) << 1);
}

/// Scales x so that its first nonzero coordinate is 1.
inline uint64_t normalize(uint64_t x, uint64_t lo) {
    if (x == 0) return 0;
    unsigned s = static_cast<unsigned>(std::countr_zero(x)) & ~1u;
    uint64_t c = (x >> s) & 3;
    if (c == 2) return times_omega(times_omega(x, lo), lo);
    if (c == 3) return times_omega(x, lo);
    return x;
}

inline bool is_normalized(uint64_t x) {
    if (x == 0) return false;
    unsigned s = static_cast<unsigned>(std::countr_zero(x)) & ~1u;
    return ((x >> s) & 3) == 1;
}

}  // namespace f4

/// Orbits of a group (given by generators acting on coordinates) on the
/// admissible lines of L / conj(P) L.
struct LineOrbits {
    uint64_t line_count = 0;
    std::vector<std::vector<uint32_t>> representatives;
    std::vector<uint64_t> sizes;
};

namespace detail {

inline std::vector<std::vector<uint32_t>> reduce_generators(const LineContext& ctx, const std::vector<EisMatrix>& gens) {
    std::vector<std::vector<uint32_t>> out;
    for (const auto& g : gens) {
        std::vector<uint32_t> m(ctx.n * ctx.n);
        for (size_t i = 0; i < ctx.n; ++i)
            for (size_t j = 0; j < ctx.n; ++j) m[i * ctx.n + j] = ctx.bar_field.encode(g(i, j));
        out.push_back(std::move(m));
    }
    return out;
}

struct UnionFind {
    std::vector<uint32_t> parent;
    explicit UnionFind(size_t m) : parent(m) { std::iota(parent.begin(), parent.end(), 0u); }
    uint32_t find(uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent[b] = a;
        else parent[a] = b;
    }
};

inline LineOrbits collect(UnionFind& uf, size_t m, const std::function<std::vector<uint32_t>(uint32_t)>& decode) {
    LineOrbits out;
    out.line_count = m;
    std::vector<int64_t> slot(m, -1);
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t r = uf.find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<int64_t>(out.sizes.size());
            out.representatives.push_back(decode(r));
            out.sizes.push_back(0);
        }
        ++out.sizes[static_cast<size_t>(slot[r])];
    }
    return out;
}

/// F_4 fast path: inert p = 2.
inline LineOrbits orbits_f4(const LineContext& ctx, const std::vector<EisMatrix>& gens) {
    const size_t n = ctx.n;
    if (n > 13) throw UnsupportedCaseError("neighbour", "packed F_4 line space limited to rank 13");
    const uint64_t lo = f4::low_bits(n);
    const uint64_t total = uint64_t{1} << (2 * n);
    // <x,x> mod 2 as a quadratic form on the 2n bits
    TraceLattice tl = trace_lattice(ctx.gram);
    std::vector<uint64_t> upper(2 * n, 0);
    uint64_t diag = 0;
    for (size_t i = 0; i < 2 * n; ++i) {
        if ((tl.gram(i, i) / 2) & 1) diag |= uint64_t{1} << i;
        for (size_t j = i + 1; j < 2 * n; ++j)
            if (tl.gram(i, j) & 1) upper[i] |= uint64_t{1} << j;
    }
    auto isotropic = [&](uint64_t x) {
        unsigned par = static_cast<unsigned>(std::popcount(x & diag));
        for (uint64_t y = x; y; y &= y - 1) {
            unsigned i = static_cast<unsigned>(std::countr_zero(y));
            par += static_cast<unsigned>(std::popcount(x & upper[i]));
        }
        return (par & 1) == 0;
    };
    std::vector<uint32_t> keys;
    std::vector<int32_t> index(total, -1);
    for (uint64_t x = 1; x < total; ++x) {
        if (!f4::is_normalized(x) || !isotropic(x)) continue;
        index[x] = static_cast<int32_t>(keys.size());
        keys.push_back(static_cast<uint32_t>(x));
    }
    // generator images through byte tables (4 coordinates per chunk)
    auto red = reduce_generators(ctx, gens);
    size_t chunks = (n + 3) / 4;
    std::vector<std::vector<uint64_t>> tables;
    for (const auto& m : red) {
        std::vector<uint64_t> t(chunks * 256, 0);
        for (size_t c = 0; c < chunks; ++c)
            for (uint32_t byte = 0; byte < 256; ++byte) {
                uint64_t img = 0;
                for (size_t k = 0; k < 4; ++k) {
                    size_t j = 4 * c + k;
                    uint32_t code = (byte >> (2 * k)) & 3;
                    if (j >= n || code == 0) continue;
                    for (size_t i = 0; i < n; ++i) {
                        uint32_t v = ctx.bar_field.mul(m[i * n + j], code);
                        img ^= static_cast<uint64_t>(v) << (2 * i);
                    }
                }
                t[c * 256 + byte] = img;
            }
        tables.push_back(std::move(t));
    }
    UnionFind uf(keys.size());
    for (uint32_t idx = 0; idx < keys.size(); ++idx) {
        uint64_t x = keys[idx];
        for (const auto& t : tables) {
            uint64_t img = 0;
            for (size_t c = 0; c < chunks; ++c) img ^= t[c * 256 + ((x >> (8 * c)) & 255)];
            int32_t j = index[f4::normalize(img, lo)];
            if (j < 0) throw InvariantViolation("neighbour", "generator does not preserve the admissible lines");
            uf.unite(idx, static_cast<uint32_t>(j));
        }
    }
    return collect(uf, keys.size(), [&](uint32_t i) {
        std::vector<uint32_t> codes(n);
        for (size_t k = 0; k < n; ++k) codes[k] = (keys[i] >> (2 * k)) & 3;
        return codes;
    });
}

}  // namespace detail

/// Calls f(codes) for each normalized line (first nonzero coordinate 1).
template <class F>
void for_each_line(const LineContext& ctx, F&& f) {
    const size_t n = ctx.n;
    const uint32_t q = static_cast<uint32_t>(ctx.bar_field.q());
    std::vector<uint32_t> codes(n, 0);
    for (size_t lead = n; lead-- > 0;) {
        std::fill(codes.begin(), codes.end(), 0);
        codes[lead] = 1;
        // free coordinates are those after the leading one
        for (;;) {
            f(static_cast<const std::vector<uint32_t>&>(codes));
            size_t k = lead + 1;
            while (k < n && ++codes[k] == q) codes[k++] = 0;
            if (k == n) break;
        }
    }
}

/// Number of normalized lines in F^n.
inline uint64_t line_count(uint64_t q, size_t n) {
    uint64_t s = 0, pw = 1;
    for (size_t i = 0; i < n; ++i) {
        s += pw;
        pw *= q;
    }
    return s;
}

inline LineOrbits admissible_line_orbits(const LineContext& ctx, const std::vector<EisMatrix>& gens) {
    if (ctx.prime.split_type == SplitType::inert && ctx.prime.p == 2) return detail::orbits_f4(ctx, gens);
    const size_t n = ctx.n;
    const uint64_t q = static_cast<uint64_t>(ctx.bar_field.q());
    if (line_count(q, n) > (uint64_t{1} << 31)) throw UnsupportedCaseError("neighbour", "too many lines to enumerate");
    auto key_of = [&](const std::vector<uint32_t>& c) {
        uint64_t k = 0;
        for (size_t i = n; i-- > 0;) k = k * q + c[i];
        return k;
    };
    std::vector<std::vector<uint32_t>> lines;
    std::unordered_map<uint64_t, uint32_t> index;
    for_each_line(ctx, [&](const std::vector<uint32_t>& c) {
        if (!ctx.admissible(c)) return;
        index.emplace(key_of(c), static_cast<uint32_t>(lines.size()));
        lines.push_back(c);
    });
    auto red = detail::reduce_generators(ctx, gens);
    const ResidueField& F = ctx.bar_field;
    detail::UnionFind uf(lines.size());
    std::vector<uint32_t> img(n);
    for (uint32_t idx = 0; idx < lines.size(); ++idx) {
        const auto& x = lines[idx];
        for (const auto& m : red) {
            for (size_t i = 0; i < n; ++i) {
                uint32_t s = 0;
                for (size_t j = 0; j < n; ++j)
                    if (x[j]) s = F.add(s, F.mul(m[i * n + j], x[j]));
                img[i] = s;
            }
            size_t lead = 0;
            while (lead < n && img[lead] == 0) ++lead;
            if (lead == n) throw InvariantViolation("neighbour", "generator is singular mod the prime");
            uint32_t inv = F.inv(img[lead]);
            for (auto& v : img) v = F.mul(v, inv);
            auto it = index.find(key_of(img));
            if (it == index.end()) throw InvariantViolation("neighbour", "generator does not preserve the admissible lines");
            uf.unite(idx, it->second);
        }
    }
    return detail::collect(uf, lines.size(), [&](uint32_t i) { return lines[i]; });
}

}  // namespace eisen
