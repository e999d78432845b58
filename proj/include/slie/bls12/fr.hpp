#pragma once

#include "slie/bls12/field.hpp"

namespace slie::bls12 {

// Scalar field of BLS12-381 (the prime group order),
// r = 0x73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001
struct FrParams {
    static constexpr size_t kLimbs = 4;
    static constexpr LimbArray<4> kModulus = {
        0xffffffff00000001ULL, 0x53bda402fffe5bfeULL,
        0x3339d80809a1d805ULL, 0x73eda753299d7d48ULL,
    };
};

using Fr = Fq<FrParams>;

inline constexpr size_t kFrBytes = 32;

// BLS parameter x = -0xd201000000010000; the magnitude drives the Miller
// loop and the final-exponentiation addition chain.
inline constexpr u64 kBlsX = 0xd201000000010000ULL;

}  // namespace slie::bls12
