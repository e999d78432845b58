#pragma once

#include "slie/bls12/fp2.hpp"

namespace slie::bls12 {

// Fp6 = Fp2[v] / (v^3 - xi), xi = 1 + u.
class Fp6 {
public:
    Fp2 c0, c1, c2;

    constexpr Fp6() = default;
    constexpr Fp6(const Fp2& a, const Fp2& b, const Fp2& c) : c0(a), c1(b), c2(c) {}

    static constexpr Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
    static constexpr Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    constexpr bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    constexpr bool operator==(const Fp6& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
    constexpr bool operator!=(const Fp6& o) const { return !(*this == o); }

    constexpr Fp6 add(const Fp6& o) const { return {c0.add(o.c0), c1.add(o.c1), c2.add(o.c2)}; }
    constexpr Fp6 sub(const Fp6& o) const { return {c0.sub(o.c0), c1.sub(o.c1), c2.sub(o.c2)}; }
    constexpr Fp6 neg() const { return {c0.neg(), c1.neg(), c2.neg()}; }
    constexpr Fp6 dbl() const { return add(*this); }

    constexpr Fp6 mul(const Fp6& o) const {
        // 6-multiplication Karatsuba variant.
        Fp2 v0 = c0.mul(o.c0);
        Fp2 v1 = c1.mul(o.c1);
        Fp2 v2 = c2.mul(o.c2);

        Fp2 t0 = c1.add(c2).mul(o.c1.add(o.c2)).sub(v1).sub(v2);  // a1b2 + a2b1
        Fp2 t1 = c0.add(c1).mul(o.c0.add(o.c1)).sub(v0).sub(v1);  // a0b1 + a1b0
        Fp2 t2 = c0.add(c2).mul(o.c0.add(o.c2)).sub(v0).sub(v2);  // a0b2 + a2b0

        return {v0.add(t0.mul_by_nonresidue()), t1.add(v2.mul_by_nonresidue()), t2.add(v1)};
    }

    constexpr Fp6 square() const {
        Fp2 s0 = c0.square();
        Fp2 ab = c0.mul(c1);
        Fp2 s1 = ab.dbl();
        Fp2 s2 = c0.sub(c1).add(c2).square();
        Fp2 bc = c1.mul(c2);
        Fp2 s3 = bc.dbl();
        Fp2 s4 = c2.square();
        return {s0.add(s3.mul_by_nonresidue()), s1.add(s4.mul_by_nonresidue()),
                s1.add(s2).add(s3).sub(s0).sub(s4)};
    }

    // Multiply by v (the Fp12 nonresidue).
    constexpr Fp6 mul_by_v() const { return {c2.mul_by_nonresidue(), c0, c1}; }

    constexpr Fp6 mul_by_fp2(const Fp2& s) const { return {c0.mul(s), c1.mul(s), c2.mul(s)}; }

    // Sparse multiply by b0 + b1 v (b2 = 0).
    constexpr Fp6 mul_by_01(const Fp2& b0, const Fp2& b1) const {
        Fp2 v0 = c0.mul(b0);
        Fp2 v1 = c1.mul(b1);
        Fp2 t0 = c1.add(c2).mul(b1).sub(v1);                    // a1*0 + a2 b1 ... = a2 b1
        Fp2 t1 = c0.add(c1).mul(b0.add(b1)).sub(v0).sub(v1);    // a0b1 + a1b0
        Fp2 t2 = c0.add(c2).mul(b0).sub(v0);                    // a2 b0
        return {v0.add(t0.mul_by_nonresidue()), t1, t2.add(v1)};
    }

    // Sparse multiply by b1 v (only middle coefficient nonzero).
    constexpr Fp6 mul_by_1(const Fp2& b1) const {
        return {c2.mul(b1).mul_by_nonresidue(), c0.mul(b1), c1.mul(b1)};
    }

    constexpr Fp6 invert() const {
        Fp2 t0 = c0.square().sub(c1.mul(c2).mul_by_nonresidue());
        Fp2 t1 = c2.square().mul_by_nonresidue().sub(c0.mul(c1));
        Fp2 t2 = c1.square().sub(c0.mul(c2));
        Fp2 denom = c0.mul(t0).add(c2.mul(t1).mul_by_nonresidue()).add(c1.mul(t2).mul_by_nonresidue());
        Fp2 inv = denom.invert();
        return {t0.mul(inv), t1.mul(inv), t2.mul(inv)};
    }

    void cmov(const Fp6& o, u64 mask) {
        c0.cmov(o.c0, mask);
        c1.cmov(o.c1, mask);
        c2.cmov(o.c2, mask);
    }

    void wipe() {
        c0.wipe();
        c1.wipe();
        c2.wipe();
    }
};

}  // namespace slie::bls12
