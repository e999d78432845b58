#pragma once

#include "slie/bls12/fp.hpp"

namespace slie::bls12 {

// Fp2 = Fp[u] / (u^2 + 1). Nonresidue for the next tower level is xi = 1 + u.
class Fp2 {
public:
    Fp c0, c1;

    constexpr Fp2() = default;
    constexpr Fp2(const Fp& a, const Fp& b) : c0(a), c1(b) {}

    static constexpr Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
    static constexpr Fp2 one() { return {Fp::one(), Fp::zero()}; }

    constexpr bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    constexpr bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }
    constexpr bool operator!=(const Fp2& o) const { return !(*this == o); }

    constexpr Fp2 add(const Fp2& o) const { return {c0.add(o.c0), c1.add(o.c1)}; }
    constexpr Fp2 sub(const Fp2& o) const { return {c0.sub(o.c0), c1.sub(o.c1)}; }
    constexpr Fp2 neg() const { return {c0.neg(), c1.neg()}; }
    constexpr Fp2 dbl() const { return add(*this); }

    constexpr Fp2 mul(const Fp2& o) const {
        // Karatsuba over the quadratic extension, u^2 = -1.
        Fp v0 = c0.mul(o.c0);
        Fp v1 = c1.mul(o.c1);
        Fp s = c0.add(c1).mul(o.c0.add(o.c1));
        return {v0.sub(v1), s.sub(v0).sub(v1)};
    }

    constexpr Fp2 square() const {
        Fp a = c0.add(c1);
        Fp b = c0.sub(c1);
        Fp c = c0.add(c0);
        return {a.mul(b), c.mul(c1)};
    }

    constexpr Fp2 mul_by_fp(const Fp& s) const { return {c0.mul(s), c1.mul(s)}; }

    // Multiply by xi = 1 + u.
    constexpr Fp2 mul_by_nonresidue() const { return {c0.sub(c1), c0.add(c1)}; }

    constexpr Fp2 conjugate() const { return {c0, c1.neg()}; }

    constexpr Fp2 invert() const {
        Fp norm = c0.square().add(c1.square());
        Fp inv = norm.invert();
        return {c0.mul(inv), c1.neg().mul(inv)};
    }

    template <size_t N>
    constexpr Fp2 pow(const LimbArray<N>& exp) const {
        Fp2 result = one();
        bool started = false;
        for (size_t i = limbs_bit_length(exp); i-- > 0;) {
            if (started) result = result.square();
            if (limbs_bit(exp, i)) {
                if (started)
                    result = result.mul(*this);
                else {
                    result = *this;
                    started = true;
                }
            }
        }
        return result;
    }

    // Square root for p ≡ 3 (mod 4); returns false when no root exists.
    bool sqrt(Fp2& out) const {
        if (is_zero()) {
            out = zero();
            return true;
        }
        Fp2 a1 = pow(kFpM3Over4);
        Fp2 alpha = a1.square().mul(*this);
        Fp2 x0 = a1.mul(*this);
        Fp2 minus_one = one().neg();
        Fp2 x;
        if (alpha == minus_one) {
            // multiply by u, a square root of -1
            x = Fp2(x0.c1.neg(), x0.c0);
        } else {
            Fp2 b = alpha.add(one()).pow(kFpM1Over2);
            x = b.mul(x0);
        }
        if (x.square() != *this) return false;
        out = x;
        return true;
    }

    // Sign convention for compressed points: ordering is lexicographic on
    // (c1, c0) with c1 most significant.
    bool is_lexicographically_largest() const {
        if (!c1.is_zero()) return c1.is_lexicographically_largest();
        return c0.is_lexicographically_largest();
    }

    void cmov(const Fp2& o, u64 mask) {
        c0.cmov(o.c0, mask);
        c1.cmov(o.c1, mask);
    }

    void wipe() {
        c0.wipe();
        c1.wipe();
    }
};

}  // namespace slie::bls12
