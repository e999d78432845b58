#pragma once

#include "slie/bls12/field.hpp"

namespace slie::bls12 {

// Base field of BLS12-381,
// p = 0x1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f624
//     1eabfffeb153ffffb9feffffffffaaab  (381 bits)
struct FpParams {
    static constexpr size_t kLimbs = 6;
    static constexpr LimbArray<6> kModulus = {
        0xb9feffffffffaaabULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL,
        0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL,
    };
};

using Fp = Fq<FpParams>;

inline constexpr size_t kFpBytes = 48;

namespace detail {
constexpr LimbArray<6> fp_exp(int add, unsigned shift) {
    LimbArray<6> v = FpParams::kModulus;
    if (add > 0) {
        u64 carry = u64(add);
        for (size_t i = 0; i < 6 && carry; ++i) {
            u128 t = u128(v[i]) + carry;
            v[i] = u64(t);
            carry = u64(t >> 64);
        }
    } else if (add < 0) {
        u64 borrow = u64(-add);
        for (size_t i = 0; i < 6 && borrow; ++i) {
            u128 t = u128(v[i]) - borrow;
            v[i] = u64(t);
            borrow = u64(t >> 64) & 1;
        }
    }
    for (unsigned s = 0; s < shift; ++s) {
        for (size_t i = 0; i < 6; ++i) {
            u64 hi = (i + 1 < 6) ? (v[i + 1] << 63) : 0;
            v[i] = (v[i] >> 1) | hi;
        }
    }
    return v;
}
}  // namespace detail

// (p+1)/4: square-root exponent, valid since p ≡ 3 (mod 4).
inline constexpr LimbArray<6> kFpSqrtExp = detail::fp_exp(+1, 2);
// (p-3)/4 and (p-1)/2: used by the Fp2 square root.
inline constexpr LimbArray<6> kFpM3Over4 = detail::fp_exp(-3, 2);
inline constexpr LimbArray<6> kFpM1Over2 = detail::fp_exp(-1, 1);

}  // namespace slie::bls12
