#pragma once

#include <span>

#include "slie/bls12/fp6.hpp"
#include "slie/bls12/fr.hpp"

namespace slie::bls12 {

// Frobenius twist constants, derived once at startup from xi = 1 + u.
struct FrobeniusConstants {
    Fp2 gamma61;  // xi^((p-1)/3)
    Fp2 gamma62;  // xi^(2(p-1)/3)
    Fp2 gamma12;  // xi^((p-1)/6)

    static const FrobeniusConstants& get() {
        static const FrobeniusConstants c = compute();
        return c;
    }

private:
    static FrobeniusConstants compute() {
        constexpr LimbArray<6> pm1_over_3 =
            limbs_div_small(limbs_sub_small(FpParams::kModulus, 1), 3);
        constexpr LimbArray<6> pm1_over_6 =
            limbs_div_small(limbs_sub_small(FpParams::kModulus, 1), 6);
        Fp2 xi(Fp::one(), Fp::one());
        FrobeniusConstants c;
        c.gamma61 = xi.pow(pm1_over_3);
        c.gamma62 = c.gamma61.square();
        c.gamma12 = xi.pow(pm1_over_6);
        return c;
    }
};

inline Fp6 frobenius(const Fp6& a) {
    const auto& k = FrobeniusConstants::get();
    return {a.c0.conjugate(), a.c1.conjugate().mul(k.gamma61), a.c2.conjugate().mul(k.gamma62)};
}

// Fp12 = Fp6[w] / (w^2 - v).
class Fp12 {
public:
    Fp6 c0, c1;

    constexpr Fp12() = default;
    constexpr Fp12(const Fp6& a, const Fp6& b) : c0(a), c1(b) {}

    static constexpr Fp12 zero() { return {Fp6::zero(), Fp6::zero()}; }
    static constexpr Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    constexpr bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    constexpr bool is_one() const { return *this == one(); }
    constexpr bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }
    constexpr bool operator!=(const Fp12& o) const { return !(*this == o); }

    constexpr Fp12 add(const Fp12& o) const { return {c0.add(o.c0), c1.add(o.c1)}; }
    constexpr Fp12 sub(const Fp12& o) const { return {c0.sub(o.c0), c1.sub(o.c1)}; }

    constexpr Fp12 mul(const Fp12& o) const {
        Fp6 v0 = c0.mul(o.c0);
        Fp6 v1 = c1.mul(o.c1);
        Fp6 s = c0.add(c1).mul(o.c0.add(o.c1));
        return {v0.add(v1.mul_by_v()), s.sub(v0).sub(v1)};
    }

    constexpr Fp12 square() const {
        // complex squaring
        Fp6 v = c0.mul(c1);
        Fp6 a = c0.add(c1).mul(c0.add(c1.mul_by_v()));
        return {a.sub(v).sub(v.mul_by_v()), v.dbl()};
    }

    // f^(p^6): cheap inverse for unit-norm elements.
    constexpr Fp12 conjugate() const { return {c0, c1.neg()}; }

    constexpr Fp12 invert() const {
        Fp6 denom = c0.square().sub(c1.square().mul_by_v());
        Fp6 inv = denom.invert();
        return {c0.mul(inv), c1.neg().mul(inv)};
    }

    // Sparse multiply by an element with nonzero coefficients at positions
    // (c0.c0, c0.c1, c1.c1) — the shape produced by pairing line evaluations.
    constexpr Fp12 mul_by_014(const Fp2& a0, const Fp2& a1, const Fp2& a4) const {
        Fp6 t0 = c0.mul_by_01(a0, a1);
        Fp6 t1 = c1.mul_by_1(a4);
        Fp2 s1 = a1.add(a4);
        Fp6 t2 = c1.add(c0).mul_by_01(a0, s1).sub(t0).sub(t1);
        return {t1.mul_by_v().add(t0), t2};
    }

    Fp12 frobenius_map() const {
        const auto& k = FrobeniusConstants::get();
        return {frobenius(c0), frobenius(c1).mul_by_fp2(k.gamma12)};
    }

    // Granger–Scott squaring; valid only in the cyclotomic subgroup.
    constexpr Fp12 cyclotomic_square() const {
        Fp2 z0 = c0.c0, z4 = c0.c1, z3 = c0.c2;
        Fp2 z2 = c1.c0, z1 = c1.c1, z5 = c1.c2;

        auto [t0a, t1a] = fp4_square(z0, z1);
        z0 = t0a.sub(z0).dbl().add(t0a);
        z1 = t1a.add(z1).dbl().add(t1a);

        auto [t0b, t1b] = fp4_square(z2, z3);
        auto [t2b, t3b] = fp4_square(z4, z5);

        z4 = t0b.sub(z4).dbl().add(t0b);
        z5 = t1b.add(z5).dbl().add(t1b);

        Fp2 t = t3b.mul_by_nonresidue();
        z2 = t.add(z2).dbl().add(t);
        z3 = t2b.sub(z3).dbl().add(t2b);

        return {Fp6(z0, z4, z3), Fp6(z2, z1, z5)};
    }

    // f^|x| via cyclotomic squaring, then conjugated: returns f^x for the
    // (negative) BLS parameter x.
    constexpr Fp12 cyclotomic_pow_x() const {
        Fp12 acc = one();
        bool started = false;
        for (int i = 63; i >= 0; --i) {
            if (started) acc = acc.cyclotomic_square();
            if ((kBlsX >> i) & 1) {
                if (started)
                    acc = acc.mul(*this);
                else {
                    acc = *this;
                    started = true;
                }
            }
        }
        return acc.conjugate();
    }

    // Constant-time exponentiation by a scalar; requires *this in the
    // cyclotomic subgroup (pairing outputs are). 4-bit fixed window with a
    // full-table scan per digit.
    Fp12 pow_scalar_ct(const Fr& exp) const {
        LimbArray<4> e = exp.to_canonical();
        Fp12 table[16];
        table[0] = one();
        table[1] = *this;
        for (int i = 2; i < 16; ++i) table[i] = table[i - 1].mul(*this);
        Fp12 acc = one();
        for (int w = 63; w >= 0; --w) {
            for (int s = 0; s < 4; ++s) acc = acc.cyclotomic_square();
            u64 digit = (e[w / 16] >> ((w % 16) * 4)) & 0xf;
            Fp12 sel = table[0];
            for (u64 j = 1; j < 16; ++j) {
                u64 diff = digit ^ j;
                u64 mask = 0 - u64((diff | (0 - diff)) >> 63 ^ 1);
                sel.cmov(table[j], mask);
            }
            acc = acc.mul(sel);
        }
        secure_wipe(e.data(), sizeof(e));
        return acc;
    }

    void cmov(const Fp12& o, u64 mask) {
        c0.cmov(o.c0, mask);
        c1.cmov(o.c1, mask);
    }

    void to_bytes(std::span<uint8_t> out) const {
        const Fp* coords[12] = {&c0.c0.c0, &c0.c0.c1, &c0.c1.c0, &c0.c1.c1,
                                &c0.c2.c0, &c0.c2.c1, &c1.c0.c0, &c1.c0.c1,
                                &c1.c1.c0, &c1.c1.c1, &c1.c2.c0, &c1.c2.c1};
        for (int i = 0; i < 12; ++i) coords[i]->to_bytes_be(out.subspan(size_t(i) * 48, 48));
    }

    static bool from_bytes(std::span<const uint8_t> in, Fp12& out) {
        if (in.size() != 576) return false;
        Fp* coords[12] = {&out.c0.c0.c0, &out.c0.c0.c1, &out.c0.c1.c0, &out.c0.c1.c1,
                          &out.c0.c2.c0, &out.c0.c2.c1, &out.c1.c0.c0, &out.c1.c0.c1,
                          &out.c1.c1.c0, &out.c1.c1.c1, &out.c1.c2.c0, &out.c1.c2.c1};
        for (int i = 0; i < 12; ++i)
            if (!Fp::from_bytes_be(in.subspan(size_t(i) * 48, 48), *coords[i])) return false;
        return true;
    }

    void wipe() {
        c0.wipe();
        c1.wipe();
    }

private:
    // Square in Fp4 = Fp2[s]/(s^2 - xi): (a + b s)^2.
    static constexpr std::pair<Fp2, Fp2> fp4_square(const Fp2& a, const Fp2& b) {
        Fp2 t0 = a.square();
        Fp2 t1 = b.square();
        Fp2 c0 = t1.mul_by_nonresidue().add(t0);
        Fp2 c1 = a.add(b).square().sub(t0).sub(t1);
        return {c0, c1};
    }
};

}  // namespace slie::bls12
