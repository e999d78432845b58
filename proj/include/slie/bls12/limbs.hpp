#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace slie::bls12 {

using u64 = uint64_t;
using u128 = unsigned __int128;

template <size_t N>
using LimbArray = std::array<u64, N>;

// r = a + b, returns carry out. Branch-free.
template <size_t N>
constexpr u64 limbs_add(LimbArray<N>& r, const LimbArray<N>& a, const LimbArray<N>& b) {
    u64 carry = 0;
    for (size_t i = 0; i < N; ++i) {
        u128 t = u128(a[i]) + b[i] + carry;
        r[i] = u64(t);
        carry = u64(t >> 64);
    }
    return carry;
}

// r = a - b, returns borrow out (0 or 1). Branch-free.
template <size_t N>
constexpr u64 limbs_sub(LimbArray<N>& r, const LimbArray<N>& a, const LimbArray<N>& b) {
    u64 borrow = 0;
    for (size_t i = 0; i < N; ++i) {
        u128 t = u128(a[i]) - b[i] - borrow;
        r[i] = u64(t);
        borrow = u64(t >> 64) & 1;
    }
    return borrow;
}

// mask must be 0 or ~0; r = mask ? a : r.
template <size_t N>
constexpr void limbs_cmov(LimbArray<N>& r, const LimbArray<N>& a, u64 mask) {
    for (size_t i = 0; i < N; ++i) r[i] = (r[i] & ~mask) | (a[i] & mask);
}

template <size_t N>
constexpr bool limbs_is_zero(const LimbArray<N>& a) {
    u64 acc = 0;
    for (size_t i = 0; i < N; ++i) acc |= a[i];
    return acc == 0;
}

// Lexicographic compare as integers: -1, 0, 1. Not constant time; callers on
// secret data use the subtract-based helpers instead.
template <size_t N>
constexpr int limbs_cmp(const LimbArray<N>& a, const LimbArray<N>& b) {
    for (size_t i = N; i-- > 0;) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

template <size_t N>
constexpr size_t limbs_bit_length(const LimbArray<N>& a) {
    for (size_t i = N; i-- > 0;) {
        if (a[i] != 0) {
            size_t bits = 0;
            u64 v = a[i];
            while (v != 0) {
                ++bits;
                v >>= 1;
            }
            return i * 64 + bits;
        }
    }
    return 0;
}

template <size_t N>
constexpr bool limbs_bit(const LimbArray<N>& a, size_t i) {
    return ((a[i / 64] >> (i % 64)) & 1) != 0;
}

// Exact long division by a small constant; remainder discarded.
template <size_t N>
constexpr LimbArray<N> limbs_div_small(const LimbArray<N>& a, u64 d) {
    LimbArray<N> q{};
    u64 rem = 0;
    for (size_t i = N; i-- > 0;) {
        u128 cur = (u128(rem) << 64) | a[i];
        q[i] = u64(cur / d);
        rem = u64(cur % d);
    }
    return q;
}

template <size_t N>
constexpr LimbArray<N> limbs_sub_small(const LimbArray<N>& a, u64 d) {
    LimbArray<N> r = a;
    u64 borrow = d;
    for (size_t i = 0; i < N && borrow; ++i) {
        u128 t = u128(r[i]) - borrow;
        r[i] = u64(t);
        borrow = (u64(t >> 64) & 1) ? 1 : 0;
    }
    return r;
}

// -m^{-1} mod 2^64 via Newton iteration (m must be odd).
constexpr u64 mont_neg_inv64(u64 m) {
    u64 x = 1;
    for (int i = 0; i < 6; ++i) x *= 2 - m * x;
    return ~x + 1;  // -x mod 2^64
}

}  // namespace slie::bls12
