#pragma once

#include <cstdint>
#include <vector>

#include "eisenhecke/core/ideal.hpp"

namespace eisen {

/// The residue field Z[w]/P with elements encoded as 0..q-1.
///
/// Inert p: a + b*w (mod p) is encoded as a + p*b. Split p: w = r (mod P) and
/// the code is a + b*r (mod p). Ramified: w = 1 (mod sqrt(-3)), code a + b (mod 3).
class ResidueField {
public:
    explicit ResidueField(const EisIdeal& P) : ideal_(P) {
        p_ = to_i64(P.p);
        if (p_ > 1000) throw UnsupportedCaseError("neighbour", "residue fields are tabulated only for p <= 1000");
        q_ = P.split_type == SplitType::inert ? p_ * p_ : p_;
        if (P.split_type == SplitType::split) {
            // the root r of x^2+x+1 with w - r in P
            for (int64_t r = 0; r < p_; ++r)
                if (divides(P.generator, EisInt{-r, 1})) root_ = r;
        } else if (P.split_type == SplitType::ramified) {
            root_ = 1;
        }
        add_.assign(static_cast<size_t>(q_ * q_), 0);
        mul_.assign(static_cast<size_t>(q_ * q_), 0);
        for (int64_t x = 0; x < q_; ++x)
            for (int64_t y = 0; y < q_; ++y) {
                add_[static_cast<size_t>(x * q_ + y)] = encode(lift(x) + lift(y));
                mul_[static_cast<size_t>(x * q_ + y)] = encode(lift(x) * lift(y));
            }
        inv_.assign(static_cast<size_t>(q_), 0);
        neg_.assign(static_cast<size_t>(q_), 0);
        for (int64_t x = 0; x < q_; ++x) {
            neg_[static_cast<size_t>(x)] = encode(-lift(x));
            for (int64_t y = 1; y < q_; ++y)
                if (mul(static_cast<uint32_t>(x), static_cast<uint32_t>(y)) == 1) inv_[static_cast<size_t>(x)] = static_cast<uint32_t>(y);
        }
    }

    const EisIdeal& ideal() const { return ideal_; }
    int64_t p() const { return p_; }
    int64_t q() const { return q_; }

    uint32_t encode(const Eis64& x) const {
        if (ideal_.split_type == SplitType::inert) {
            int64_t a = ((x.a % p_) + p_) % p_, b = ((x.b % p_) + p_) % p_;
            return static_cast<uint32_t>(a + p_ * b);
        }
        __int128 v = static_cast<__int128>(x.a) + static_cast<__int128>(x.b) * root_;
        int64_t r = static_cast<int64_t>(v % p_);
        return static_cast<uint32_t>(r < 0 ? r + p_ : r);
    }
    uint32_t encode(const EisInt& x) const {
        return encode(Eis64{to_i64(mod(x.a, Integer(p_))), to_i64(mod(x.b, Integer(p_)))});
    }

    Eis64 lift(uint32_t c) const {
        if (ideal_.split_type == SplitType::inert) return {static_cast<int64_t>(c) % p_, static_cast<int64_t>(c) / p_};
        return {static_cast<int64_t>(c), 0};
    }

    uint32_t add(uint32_t x, uint32_t y) const { return add_[x * q_ + y]; }
    uint32_t mul(uint32_t x, uint32_t y) const { return mul_[x * q_ + y]; }
    uint32_t neg(uint32_t x) const { return neg_[x]; }
    uint32_t inv(uint32_t x) const {
        if (x == 0) throw PreconditionError("neighbour", "inverse of zero in the residue field");
        return inv_[x];
    }
    uint32_t sub(uint32_t x, uint32_t y) const { return add(x, neg(y)); }

private:
    EisIdeal ideal_;
    int64_t p_ = 0, q_ = 0, root_ = 0;
    std::vector<uint32_t> add_, mul_, inv_, neg_;
};

}  // namespace eisen
