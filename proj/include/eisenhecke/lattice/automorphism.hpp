#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eisenhecke/lattice/enumerate.hpp"
#include "eisenhecke/lattice/invariants.hpp"

namespace eisen {

namespace ps {

/// Open-addressing hash from coordinate vectors to their index in a list.
class VectorIndex {
public:
    void build(const std::vector<int64_t>& coords, size_t width) {
        width_ = width;
        size_t count = width ? coords.size() / width : 0;
        size_t cap = 16;
        while (cap < 2 * count + 16) cap <<= 1;
        mask_ = cap - 1;
        slots_.assign(cap, -1);
        for (size_t k = 0; k < count; ++k) {
            size_t h = hash(coords.data() + k * width) & mask_;
            while (slots_[h] >= 0) h = (h + 1) & mask_;
            slots_[h] = static_cast<int64_t>(k);
        }
    }

    int64_t find(const std::vector<int64_t>& coords, const int64_t* c) const {
        size_t h = hash(c) & mask_;
        while (slots_[h] >= 0) {
            const int64_t* v = coords.data() + static_cast<size_t>(slots_[h]) * width_;
            if (std::equal(c, c + width_, v)) return slots_[h];
            h = (h + 1) & mask_;
        }
        return -1;
    }

private:
    size_t hash(const int64_t* c) const {
        uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (size_t i = 0; i < width_; ++i) {
            h ^= static_cast<uint64_t>(c[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h * 0xff51afd7ed558ccdULL);
    }

    size_t width_ = 0;
    std::vector<int64_t> slots_;
    size_t mask_ = 0;
};

inline Eis64 mul(int64_t a, int64_t b, int64_t c, int64_t d) {
    int64_t bd = b * d;
    return {a * c - bd, a * d + b * c - bd};
}

/// Vectors of bounded norm together with an inner-product oracle, in a fixed
/// coordinate system with Gram matrix gram.
struct VectorSpace {
    size_t n = 0;
    Eis64Matrix gram;
    std::vector<int64_t> coords;  // 2n per vector
    std::vector<int64_t> norms;
    VectorIndex index;

    size_t size() const { return norms.size(); }
    const int64_t* at(size_t k) const { return coords.data() + k * 2 * n; }

    void finalize() { index.build(coords, 2 * n); }
    int64_t find(const int64_t* c) const { return index.find(coords, c); }

    /// Row r = u^dagger G so that <u, v> = r . v.
    std::vector<Eis64> dual_row(const int64_t* u) const {
        std::vector<Eis64> r(n, Eis64{0, 0});
        for (size_t i = 0; i < n; ++i) {
            Eis64 ui = Eis64{u[2 * i], u[2 * i + 1]}.conj();
            if (ui.is_zero()) continue;
            for (size_t j = 0; j < n; ++j) r[j] += ui * gram(i, j);
        }
        return r;
    }

    static Eis64 dot(const std::vector<Eis64>& r, const int64_t* v, size_t n) {
        int64_t a = 0, b = 0;
        for (size_t j = 0; j < n; ++j) {
            const int64_t c = v[2 * j], d = v[2 * j + 1];
            if ((c | d) == 0) continue;
            Eis64 p = mul(r[j].a, r[j].b, c, d);
            a += p.a;
            b += p.b;
        }
        return {a, b};
    }
};

/// Source data for the backtracking: a basis of short vectors b_1..b_n and
/// the identity-case candidate lists used as fingerprints.
struct SourceBasis {
    size_t n = 0;
    Eis64Matrix gram_b;            // Gram of the chosen basis
    EisMatrix P;                   // chosen basis in original coordinates (columns)
    EisMatrix P_inv;               // inverse of P over Z[w]
    int64_t bound = 0;             // norm bound of the vector set
    VectorSpace space;             // vectors in b-coordinates, gram = gram_b
    std::vector<uint32_t> basis_idx;
    // fp[l][m]: size of the candidate list for position m after fixing the
    // first l basis vectors to themselves
    std::vector<std::vector<size_t>> fp;
    std::vector<std::vector<std::vector<uint32_t>>> id_lists;  // id_lists[l][m]
};

/// Converts original coordinates (length 2n) to b-coordinates.
inline void to_basis_coords(const EisMatrix& P_inv, const int64_t* x, int64_t* out) {
    size_t n = P_inv.rows();
    for (size_t i = 0; i < n; ++i) {
        int64_t a = 0, b = 0;
        for (size_t j = 0; j < n; ++j) {
            int64_t c = x[2 * j], d = x[2 * j + 1];
            if ((c | d) == 0) continue;
            Eis64 p = mul(P_inv(i, j).a.get_si(), P_inv(i, j).b.get_si(), c, d);
            a += p.a;
            b += p.b;
        }
        out[2 * i] = a;
        out[2 * i + 1] = b;
    }
}

/// Greedy choice of n vectors (in order of norm) spanning a saturated
/// sublattice at every step; fails when the list does not allow it.
inline std::optional<std::vector<size_t>> greedy_basis(const VectorList& vl, size_t n) {
    std::vector<size_t> order(vl.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return vl.norms[x] < vl.norms[y]; });
    std::vector<size_t> chosen;
    // echelon rows over E for independence tests
    std::vector<std::vector<EisQ>> ech;
    std::vector<size_t> ech_piv;
    for (size_t k : order) {
        if (chosen.size() == n) break;
        if (vl.norms[k] == 0) continue;
        std::vector<EisQ> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = to_field(to_big(vl.coord(k, i)));
        for (size_t r = 0; r < ech.size(); ++r) {
            const EisQ& f = v[ech_piv[r]];
            if (is_zero(f)) continue;
            EisQ g = f;
            for (size_t i = 0; i < n; ++i) v[i] -= g * ech[r][i];
        }
        size_t piv = n;
        for (size_t i = 0; i < n; ++i)
            if (!is_zero(v[i])) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        // saturation test of chosen + this vector
        EisMatrix m(chosen.size() + 1, n);
        for (size_t r = 0; r < chosen.size(); ++r)
            for (size_t i = 0; i < n; ++i) m(r, i) = to_big(vl.coord(chosen[r], i));
        for (size_t i = 0; i < n; ++i) m(chosen.size(), i) = to_big(vl.coord(k, i));
        bool saturated = true;
        for (const auto& d : smith_diagonal(m))
            if (!is_unit(d)) saturated = false;
        if (!saturated) continue;
        EisQ inv = inverse(v[piv]);
        for (auto& x : v) x = x * inv;
        for (auto& row : ech) {
            EisQ f = row[piv];
            if (is_zero(f)) continue;
            for (size_t i = 0; i < n; ++i) row[i] -= f * v[i];
        }
        ech.push_back(std::move(v));
        ech_piv.push_back(piv);
        chosen.push_back(k);
    }
    if (chosen.size() < n) return std::nullopt;
    return chosen;
}

inline void filter(const VectorSpace& sp, const std::vector<uint32_t>& in, const std::vector<Eis64>& row,
                   const Eis64& target, std::vector<uint32_t>& out) {
    out.clear();
    for (uint32_t k : in)
        if (VectorSpace::dot(row, sp.at(k), sp.n) == target) out.push_back(k);
}

/// Builds the source data for lattice Gram g (positive definite, integral).
inline SourceBasis make_source(const Eis64Matrix& g) {
    size_t n = g.rows();
    SourceBasis src;
    src.n = n;
    // norm shells until a greedy basis exists
    TraceLattice tl = trace_lattice(g);
    I64Matrix q = tl.gram;
    lll_reduce(q);
    int64_t max_diag = 0;
    for (size_t i = 0; i < q.rows(); ++i) max_diag = std::max(max_diag, q(i, i) / 2);
    VectorList vl;
    std::optional<std::vector<size_t>> chosen;
    for (int64_t m = 1;; ++m) {
        if (m > 4 * max_diag + 8) throw InvariantViolation("lattice", "no basis of short vectors found");
        vl = enumerate_vectors(g, m, false);
        if (std::find(vl.norms.begin(), vl.norms.end(), m) == vl.norms.end()) continue;
        chosen = greedy_basis(vl, n);
        if (chosen) {
            src.bound = m;
            break;
        }
    }
    src.P = EisMatrix(n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) src.P(i, j) = to_big(vl.coord((*chosen)[j], i));
    src.P_inv = to_integral(inverse(to_field(src.P)));
    src.gram_b = (adjoint(src.P) * g.map([](const Eis64& x) { return to_big(x); }) * src.P)
                     .map([](const EisInt& x) { return to_small(x); });
    src.space.n = n;
    src.space.gram = src.gram_b;
    src.space.coords.resize(vl.coords.size());
    for (size_t k = 0; k < vl.size(); ++k) to_basis_coords(src.P_inv, vl.at(k), src.space.coords.data() + k * 2 * n);
    src.space.norms = vl.norms;
    src.space.finalize();
    for (size_t j = 0; j < n; ++j) src.basis_idx.push_back(static_cast<uint32_t>((*chosen)[j]));
    // identity-case candidate lists
    src.id_lists.assign(n + 1, std::vector<std::vector<uint32_t>>(n));
    src.fp.assign(n + 1, std::vector<size_t>(n, 0));
    for (size_t m = 0; m < n; ++m) {
        for (size_t k = 0; k < src.space.size(); ++k)
            if (src.space.norms[k] == src.gram_b(m, m).a) src.id_lists[0][m].push_back(static_cast<uint32_t>(k));
        src.fp[0][m] = src.id_lists[0][m].size();
    }
    for (size_t l = 0; l < n; ++l) {
        auto row = src.space.dual_row(src.space.at(src.basis_idx[l]));
        for (size_t m = l + 1; m < n; ++m) {
            filter(src.space, src.id_lists[l][m], row, src.gram_b(l, m), src.id_lists[l + 1][m]);
            src.fp[l + 1][m] = src.id_lists[l + 1][m].size();
        }
        // keep only what later searches need: lists at level l for m >= l
    }
    return src;
}

/// Target vector set: vectors of norm <= bound in the target's own coordinates.
inline VectorSpace make_target(const Eis64Matrix& g, int64_t bound) {
    VectorList vl = enumerate_vectors(g, bound, false);
    VectorSpace sp;
    sp.n = g.rows();
    sp.gram = g;
    sp.coords = std::move(vl.coords);
    sp.norms = std::move(vl.norms);
    sp.finalize();
    return sp;
}

/// Depth-first search for images of the source basis inside a target space.
class Search {
public:
    Search(const SourceBasis& src, const VectorSpace& tgt) : src_(src), tgt_(tgt), n_(src.n) {
        lists_.assign(n_ + 1, std::vector<std::vector<uint32_t>>(n_));
        images_.assign(n_, 0);
    }

    /// Full search with images fixed for the first `fixed` positions.
    /// lists0[m] must be the candidate lists for positions m >= fixed.
    bool run(size_t fixed, const std::vector<uint32_t>& prefix, const std::vector<std::vector<uint32_t>>& lists0) {
        for (size_t l = 0; l < fixed; ++l) images_[l] = prefix[l];
        for (size_t m = fixed; m < n_; ++m) lists_[fixed][m] = lists0[m];
        return dfs(fixed);
    }

    const std::vector<uint32_t>& images() const { return images_; }
    uint64_t nodes() const { return nodes_; }

private:
    bool dfs(size_t l) {
        ++nodes_;
        if (l == n_) return true;
        const auto& cand = lists_[l][l];
        for (uint32_t c : cand) {
            images_[l] = c;
            auto row = tgt_.dual_row(tgt_.at(c));
            bool ok = true;
            for (size_t m = l + 1; m < n_ && ok; ++m) {
                filter(tgt_, lists_[l][m], row, src_.gram_b(l, m), lists_[l + 1][m]);
                if (lists_[l + 1][m].size() != src_.fp[l + 1][m]) ok = false;
            }
            if (ok && dfs(l + 1)) return true;
        }
        return false;
    }

    const SourceBasis& src_;
    const VectorSpace& tgt_;
    size_t n_;
    std::vector<std::vector<std::vector<uint32_t>>> lists_;
    std::vector<uint32_t> images_;
    uint64_t nodes_ = 0;
};

}  // namespace ps

/// An automorphism group given by generators (matrices in the coordinates of
/// the lattice's own basis) and its order.
struct AutomorphismGroup {
    Integer order;
    std::vector<EisMatrix> generators;
    std::vector<Integer> orbit_lengths;  // stabilizer chain, last basis vector first
};

/// |Aut(L)| and generators by backtracking with stabilizer-chain accounting.
inline AutomorphismGroup automorphism_group(const Eis64Matrix& g) {
    size_t n = g.rows();
    AutomorphismGroup out;
    out.order = 1;
    if (n == 0) return out;
    ps::SourceBasis src = ps::make_source(g);
    const ps::VectorSpace& sp = src.space;
    // generators in b-coordinates as images of the basis (vector indices),
    // plus lazily filled permutations of the vector list
    std::vector<std::vector<uint32_t>> gen_images;
    std::vector<std::vector<int32_t>> perms;
    std::vector<int64_t> buf(2 * n);
    auto apply = [&](size_t gi, uint32_t v) -> uint32_t {
        int32_t& slot = perms[gi][v];
        if (slot >= 0) return static_cast<uint32_t>(slot);
        const int64_t* x = sp.at(v);
        for (size_t i = 0; i < n; ++i) {
            int64_t a = 0, b = 0;
            for (size_t j = 0; j < n; ++j) {
                int64_t c = x[2 * j], d = x[2 * j + 1];
                if ((c | d) == 0) continue;
                const int64_t* col = sp.at(gen_images[gi][j]);
                Eis64 p = ps::mul(col[2 * i], col[2 * i + 1], c, d);
                a += p.a;
                b += p.b;
            }
            buf[2 * i] = a;
            buf[2 * i + 1] = b;
        }
        int64_t idx = sp.find(buf.data());
        if (idx < 0) throw InvariantViolation("lattice", "automorphism maps a vector outside the vector set");
        slot = static_cast<int32_t>(idx);
        return static_cast<uint32_t>(idx);
    };
    ps::Search search(src, sp);
    std::vector<uint32_t> prefix(src.basis_idx.begin(), src.basis_idx.end());
    std::vector<int8_t> state(sp.size(), 0);  // 1 = in orbit, 2 = failed
    for (size_t k = n; k-- > 0;) {
        std::fill(state.begin(), state.end(), 0);
        std::vector<uint32_t> orbit{src.basis_idx[k]};
        state[src.basis_idx[k]] = 1;
        // generators fixing b_0..b_{k-1}
        std::vector<size_t> active;
        for (size_t gi = 0; gi < gen_images.size(); ++gi) active.push_back(gi);
        auto close = [&](std::vector<uint32_t>& orb, int8_t mark) {
            for (size_t pos = 0; pos < orb.size(); ++pos)
                for (size_t gi : active) {
                    uint32_t w = apply(gi, orb[pos]);
                    if (state[w] != mark) {
                        state[w] = mark;
                        orb.push_back(w);
                    }
                }
        };
        close(orbit, 1);
        const auto& cands = src.id_lists[k][k];
        for (uint32_t c : cands) {
            if (state[c] != 0) continue;
            std::vector<std::vector<uint32_t>> lists0(n);
            lists0[k] = {c};
            // lists for positions > k: identity-filtered, then by c
            auto row = sp.dual_row(sp.at(c));
            bool ok = true;
            for (size_t m = k + 1; m < n && ok; ++m) {
                ps::filter(sp, src.id_lists[k][m], row, src.gram_b(k, m), lists0[m]);
                if (lists0[m].size() != src.fp[k + 1][m]) ok = false;
            }
            bool found = false;
            if (ok) {
                std::vector<std::vector<uint32_t>> l1(n);
                for (size_t m = k + 1; m < n; ++m) l1[m] = lists0[m];
                std::vector<uint32_t> pre = prefix;
                pre[k] = c;
                found = search.run(k + 1, pre, l1);
            }
            if (found) {
                gen_images.push_back(search.images());
                perms.emplace_back(sp.size(), -1);
                active.push_back(gen_images.size() - 1);
                close(orbit, 1);
            } else {
                std::vector<uint32_t> bad{c};
                state[c] = 2;
                close(bad, 2);
            }
        }
        out.orbit_lengths.emplace_back(static_cast<unsigned long>(orbit.size()));
        out.order *= static_cast<unsigned long>(orbit.size());
    }
    // generators in original coordinates: U = P * M * P^{-1}, M = images in b-coords
    for (const auto& im : gen_images) {
        EisMatrix M(n, n);
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) {
                const int64_t* x = sp.at(im[j]);
                M(i, j) = EisInt{x[2 * i], x[2 * i + 1]};
            }
        out.generators.push_back(src.P * M * src.P_inv);
    }
    return out;
}

inline Integer automorphism_order(const HermitianLattice& L) {
    if (L.rank() == 0) return 1;
    if (!L.is_integral() || !L.is_positive_definite())
        throw PreconditionError("lattice", "automorphism search needs a definite integral lattice");
    return automorphism_group(L.gram64()).order;
}

/// Basis-independent invariants used to separate isometry classes cheaply.
struct Fingerprint {
    Integer det;
    std::vector<uint64_t> counts;  // vectors of norm 1..k

    friend bool operator==(const Fingerprint& x, const Fingerprint& y) { return x.det == y.det && x.counts == y.counts; }
    friend bool operator!=(const Fingerprint& x, const Fingerprint& y) { return !(x == y); }
    friend bool operator<(const Fingerprint& x, const Fingerprint& y) {
        if (x.det != y.det) return x.det < y.det;
        return x.counts < y.counts;
    }
    std::string str() const {
        std::string s = "det=" + det.get_str() + " counts=";
        for (size_t i = 0; i < counts.size(); ++i) s += (i ? "," : "") + std::to_string(counts[i]);
        return s;
    }
};

inline Integer hermitian_det(const EisMatrix& g) {
    EisQ d = determinant(to_field(g));
    if (d.b != 0 || d.a.get_den() != 1) throw InvariantViolation("lattice", "Hermitian determinant is not an integer");
    return d.a.get_num();
}

inline Fingerprint fingerprint(const Eis64Matrix& g, int64_t max_norm) {
    Fingerprint f;
    f.det = hermitian_det(g.map([](const Eis64& x) { return to_big(x); }));
    auto c = norm_counts(g, max_norm);
    for (int64_t k = 1; k <= max_norm; ++k) f.counts.push_back(c[k]);
    return f;
}

/// Isometry invariant finer than Fingerprint: over the shortest vectors (the
/// shells up to the first norm with at least 2n vectors in total), the
/// multiset of per-vector histograms of (<w,w>, |<v,w>|^2).
using ShellProfile = std::map<std::vector<int64_t>, uint64_t>;

inline constexpr size_t kShellProfileCap = 2048;

inline ShellProfile shell_profile(const Eis64Matrix& g) {
    const size_t n = g.rows();
    int64_t bound = 1;
    VectorList vl;
    for (;; ++bound) {
        vl = enumerate_vectors(g, bound, false);
        if (vl.size() >= 2 * n) break;
    }
    // quadratic in the shell size; an empty profile filters nothing
    if (vl.size() > kShellProfileCap) return {};
    ps::VectorSpace sp;
    sp.n = n;
    sp.gram = g;
    ShellProfile out;
    std::map<std::pair<int64_t, int64_t>, uint64_t> h;
    for (size_t i = 0; i < vl.size(); ++i) {
        h.clear();
        auto row = sp.dual_row(vl.at(i));
        for (size_t j = 0; j < vl.size(); ++j) {
            Eis64 ip = ps::VectorSpace::dot(row, vl.at(j), n);
            ++h[{vl.norms[j], ip.a * ip.a - ip.a * ip.b + ip.b * ip.b}];
        }
        std::vector<int64_t> key{vl.norms[i]};
        for (const auto& [k, c] : h) {
            key.push_back(k.first);
            key.push_back(k.second);
            key.push_back(static_cast<int64_t>(c));
        }
        ++out[key];
    }
    return out;
}

/// Result of an isometry test: either U with U^dagger G1 U = G2 or the name
/// and values of a distinguishing invariant.
struct IsometryCertificate {
    bool isometric = false;
    EisMatrix U;
    std::string witness;
};

/// Vector sets of one lattice at several norm bounds, kept for repeated
/// isometry tests against it.
class IsometryTarget {
public:
    explicit IsometryTarget(Eis64Matrix g) : gram_(std::move(g)) {}
    const Eis64Matrix& gram() const { return gram_; }
    const ps::VectorSpace& space(int64_t bound) {
        auto it = spaces_.find(bound);
        if (it == spaces_.end()) it = spaces_.emplace(bound, ps::make_target(gram_, bound)).first;
        return it->second;
    }

private:
    Eis64Matrix gram_;
    std::map<int64_t, ps::VectorSpace> spaces_;
};

/// Searches for U with U^dagger G_target U = G_source, where src was built
/// from G_source. Returns nullopt when none exists.
inline std::optional<EisMatrix> find_isometry(const ps::SourceBasis& src, IsometryTarget& target) {
    size_t n = src.n;
    if (target.gram().rows() != n) return std::nullopt;
    const ps::VectorSpace& tgt = target.space(src.bound);
    std::vector<std::vector<uint32_t>> lists0(n);
    for (size_t m = 0; m < n; ++m)
        for (size_t k = 0; k < tgt.size(); ++k)
            if (tgt.norms[k] == src.gram_b(m, m).a) lists0[m].push_back(static_cast<uint32_t>(k));
    for (size_t m = 0; m < n; ++m)
        if (lists0[m].size() != src.fp[0][m]) return std::nullopt;
    ps::Search search(src, tgt);
    if (!search.run(0, {}, lists0)) return std::nullopt;
    // images of the chosen source basis in target coordinates, then back to
    // the source's own basis
    EisMatrix X(n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) {
            const int64_t* x = tgt.at(search.images()[j]);
            X(i, j) = EisInt{x[2 * i], x[2 * i + 1]};
        }
    return X * src.P_inv;
}

inline IsometryCertificate is_isometric(const Eis64Matrix& g1, const Eis64Matrix& g2) {
    IsometryCertificate cert;
    size_t n = g1.rows();
    if (g2.rows() != n) {
        cert.witness = "rank: " + std::to_string(n) + " vs " + std::to_string(g2.rows());
        return cert;
    }
    if (n == 0) {
        cert.isometric = true;
        return cert;
    }
    Integer d1 = hermitian_det(g1.map([](const Eis64& x) { return to_big(x); }));
    Integer d2 = hermitian_det(g2.map([](const Eis64& x) { return to_big(x); }));
    if (d1 != d2) {
        cert.witness = "determinant: " + d1.get_str() + " vs " + d2.get_str();
        return cert;
    }
    // map the short basis of L2 into L1
    ps::SourceBasis src = ps::make_source(g2);
    Fingerprint f1 = fingerprint(g1, src.bound), f2 = fingerprint(g2, src.bound);
    if (f1 != f2) {
        cert.witness = "norm counts: " + f1.str() + " vs " + f2.str();
        return cert;
    }
    if (shell_profile(g1) != shell_profile(g2)) {
        cert.witness = "inner products among shortest vectors differ";
        return cert;
    }
    IsometryTarget target(g1);
    auto U = find_isometry(src, target);
    if (!U) {
        cert.witness = "exhaustive search found no isometry";
        return cert;
    }
    cert.U = *U;
    EisMatrix G1 = g1.map([](const Eis64& x) { return to_big(x); });
    EisMatrix G2 = g2.map([](const Eis64& x) { return to_big(x); });
    if (adjoint(cert.U) * G1 * cert.U != G2) throw InvariantViolation("lattice", "isometry certificate does not verify");
    cert.isometric = true;
    return cert;
}

inline IsometryCertificate is_isometric(const HermitianLattice& L1, const HermitianLattice& L2) {
    for (const auto* L : {&L1, &L2})
        if (!L->is_integral() || !L->is_positive_definite())
            throw PreconditionError("lattice", "isometry test needs definite integral lattices");
    if (L1.rank() != L2.rank()) {
        IsometryCertificate c;
        c.witness = "rank";
        return c;
    }
    if (discriminant(L1) != discriminant(L2)) {
        IsometryCertificate c;
        c.witness = "discriminant: " + discriminant(L1).str() + " vs " + discriminant(L2).str();
        return c;
    }
    return is_isometric(L1.gram64(), L2.gram64());
}

}  // namespace eisen
