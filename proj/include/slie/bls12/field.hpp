#pragma once

#include <cstring>
#include <span>

#include "slie/bls12/limbs.hpp"
#include "slie/common/secure.hpp"

namespace slie::bls12 {

// Prime field in Montgomery representation. Params supplies the modulus as
// little-endian 64-bit limbs; R, R^2 and the Montgomery factor are derived at
// compile time. Arithmetic is branch-free on values (add/sub/mul/square/pow),
// so secret field elements do not influence control flow or memory addresses.
template <typename Params>
class Fq {
public:
    static constexpr size_t kLimbs = Params::kLimbs;
    static constexpr size_t kBytes = kLimbs * 8;
    using L = LimbArray<kLimbs>;

    static constexpr L kMod = Params::kModulus;
    static constexpr u64 kInv = mont_neg_inv64(kMod[0]);

    constexpr Fq() : v_{} {}

    static constexpr Fq zero() { return Fq(); }
    static constexpr Fq one() { return from_montgomery_limbs(kR); }

    // value must already be fully reduced (< modulus).
    static constexpr Fq from_canonical(const L& value) {
        Fq r;
        r.v_ = value;
        r = r.mul(from_montgomery_limbs(kR2));
        return r;
    }

    static constexpr Fq from_u64(u64 value) {
        L v{};
        v[0] = value;
        return from_canonical(v);
    }

    constexpr L to_canonical() const {
        // Montgomery reduce once more with multiplier 1.
        L one_limbs{};
        one_limbs[0] = 1;
        Fq t = mul_limbs(v_, one_limbs);
        return t.v_;
    }

    static constexpr Fq from_montgomery_limbs(const L& m) {
        Fq r;
        r.v_ = m;
        return r;
    }
    constexpr const L& montgomery_limbs() const { return v_; }

    constexpr Fq add(const Fq& o) const {
        Fq r;
        u64 carry = limbs_add(r.v_, v_, o.v_);
        reduce_once(r.v_, carry);
        return r;
    }

    constexpr Fq sub(const Fq& o) const {
        Fq r;
        u64 borrow = limbs_sub(r.v_, v_, o.v_);
        // add modulus back when we went negative
        L t;
        u64 mask = 0 - borrow;
        L mod_masked{};
        for (size_t i = 0; i < kLimbs; ++i) mod_masked[i] = kMod[i] & mask;
        limbs_add(t, r.v_, mod_masked);
        r.v_ = t;
        return r;
    }

    constexpr Fq neg() const {
        Fq r;
        limbs_sub(r.v_, kMod, v_);
        // keep zero at zero, branch-free
        u64 acc = 0;
        for (size_t i = 0; i < kLimbs; ++i) acc |= v_[i];
        u64 nonzero_mask = 0 - ((acc | (0 - acc)) >> 63);
        for (size_t i = 0; i < kLimbs; ++i) r.v_[i] &= nonzero_mask;
        return r;
    }

    constexpr Fq dbl() const { return add(*this); }

    constexpr Fq mul(const Fq& o) const { return mul_limbs(v_, o.v_); }
    constexpr Fq square() const { return mul_limbs(v_, v_); }

    // Exponent is public (inversion / square roots use fixed exponents).
    constexpr Fq pow(const L& exp) const {
        Fq result = one();
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

    // Fermat inversion; returns zero for zero.
    constexpr Fq invert() const {
        L e = kMod;
        u64 two = 2;
        u128 t = u128(e[0]) - two;
        e[0] = u64(t);
        u64 borrow = u64(t >> 64) & 1;
        for (size_t i = 1; i < kLimbs && borrow; ++i) {
            t = u128(e[i]) - borrow;
            e[i] = u64(t);
            borrow = u64(t >> 64) & 1;
        }
        return pow(e);
    }

    constexpr bool is_zero() const { return limbs_is_zero(v_); }

    constexpr bool operator==(const Fq& o) const {
        u64 acc = 0;
        for (size_t i = 0; i < kLimbs; ++i) acc |= v_[i] ^ o.v_[i];
        return acc == 0;
    }
    constexpr bool operator!=(const Fq& o) const { return !(*this == o); }

    // mask must be 0 or ~0; selects o when mask is set.
    constexpr void cmov(const Fq& o, u64 mask) { limbs_cmov(v_, o.v_, mask); }

    // True when the canonical value is strictly greater than (modulus-1)/2.
    // Used for the compressed-point sign bit.
    bool is_lexicographically_largest() const {
        L half;
        // ceil((p+1)/2) = (p >> 1) + 1 for odd p
        for (size_t i = 0; i < kLimbs; ++i) {
            half[i] = kMod[i] >> 1;
            if (i + 1 < kLimbs) half[i] |= kMod[i + 1] << 63;
        }
        u128 t = u128(half[0]) + 1;
        half[0] = u64(t);
        u64 carry = u64(t >> 64);
        for (size_t i = 1; i < kLimbs && carry; ++i) {
            t = u128(half[i]) + carry;
            half[i] = u64(t);
            carry = u64(t >> 64);
        }
        L canon = to_canonical();
        L scratch;
        u64 borrow = limbs_sub(scratch, canon, half);
        return borrow == 0;  // canon >= (p+1)/2  <=>  canon > (p-1)/2
    }

    void to_bytes_be(std::span<uint8_t> out) const {
        L canon = to_canonical();
        for (size_t i = 0; i < kBytes; ++i)
            out[i] = uint8_t(canon[kLimbs - 1 - i / 8] >> (56 - 8 * (i % 8)));
    }

    // Rejects values >= modulus.
    static bool from_bytes_be(std::span<const uint8_t> in, Fq& out) {
        if (in.size() != kBytes) return false;
        L v{};
        for (size_t i = 0; i < kBytes; ++i)
            v[kLimbs - 1 - i / 8] |= u64(in[i]) << (56 - 8 * (i % 8));
        L scratch;
        if (limbs_sub(scratch, v, kMod) == 0) return false;  // v >= p
        out = from_canonical(v);
        return true;
    }

    void wipe() { secure_wipe(v_.data(), sizeof(v_)); }

private:
    static constexpr void reduce_once(L& v, u64 carry_in) {
        L t;
        u64 borrow = limbs_sub(t, v, kMod);
        // keep the subtraction iff v >= mod (borrow==0) or we carried out
        u64 keep = 0 - (carry_in | (1 - borrow));
        limbs_cmov(v, t, keep);
    }

    // CIOS Montgomery multiplication. Requires modulus < 2^(64*kLimbs - 2),
    // which holds for both BLS12-381 fields, so one conditional subtract
    // suffices.
    static constexpr Fq mul_limbs(const L& a, const L& b) {
        LimbArray<kLimbs + 2> t{};
        for (size_t i = 0; i < kLimbs; ++i) {
            u128 carry = 0;
            for (size_t j = 0; j < kLimbs; ++j) {
                u128 cur = u128(a[j]) * b[i] + t[j] + carry;
                t[j] = u64(cur);
                carry = cur >> 64;
            }
            u128 cur = u128(t[kLimbs]) + carry;
            t[kLimbs] = u64(cur);
            t[kLimbs + 1] = u64(cur >> 64);

            u64 m = t[0] * kInv;
            carry = (u128(m) * kMod[0] + t[0]) >> 64;
            for (size_t j = 1; j < kLimbs; ++j) {
                cur = u128(m) * kMod[j] + t[j] + carry;
                t[j - 1] = u64(cur);
                carry = cur >> 64;
            }
            cur = u128(t[kLimbs]) + carry;
            t[kLimbs - 1] = u64(cur);
            t[kLimbs] = t[kLimbs + 1] + u64(cur >> 64);
            t[kLimbs + 1] = 0;
        }
        Fq r;
        for (size_t i = 0; i < kLimbs; ++i) r.v_[i] = t[i];
        reduce_once(r.v_, t[kLimbs]);
        return r;
    }

    static constexpr L compute_r(size_t doublings) {
        // 2^doublings mod p via repeated doubling, starting from 1.
        L v{};
        v[0] = 1;
        for (size_t d = 0; d < doublings; ++d) {
            L sum;
            u64 carry = limbs_add(sum, v, v);
            L t;
            u64 borrow = limbs_sub(t, sum, kMod);
            u64 keep = 0 - (carry | (1 - borrow));
            limbs_cmov(sum, t, keep);
            v = sum;
        }
        return v;
    }

public:
    static constexpr L kR = compute_r(64 * kLimbs);
    static constexpr L kR2 = compute_r(128 * kLimbs);

private:
    L v_;
};

}  // namespace slie::bls12
