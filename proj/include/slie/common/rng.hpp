#pragma once

#include <openssl/evp.h>
#include <openssl/rand.h>
#include <openssl/sha.h>

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>

#include "slie/common/errors.hpp"
#include "slie/common/secure.hpp"

namespace slie {

// All randomness is injected through this handle; the library keeps no
// global RNG state.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual void fill(std::span<uint8_t> out) = 0;
};

class SystemRandom final : public RandomSource {
public:
    void fill(std::span<uint8_t> out) override {
        if (out.empty()) return;
        if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1)
            raise(ErrorCode::RngFailure, "system RNG unavailable");
    }
};

// Deterministic stream for reproducibility vectors: ChaCha20 keystream keyed
// by SHA-256(seed), zero IV, sequential blocks.
class SeededRandom final : public RandomSource {
public:
    explicit SeededRandom(std::string_view seed) {
        std::array<uint8_t, 32> key{};
        SHA256(reinterpret_cast<const uint8_t*>(seed.data()), seed.size(), key.data());
        init(key);
        secure_wipe(key.data(), key.size());
    }

    explicit SeededRandom(const std::array<uint8_t, 32>& key) { init(key); }

    void fill(std::span<uint8_t> out) override {
        if (out.empty()) return;
        // ChaCha20 of zeros == raw keystream.
        std::vector<uint8_t> zeros(out.size(), 0);
        int len = 0;
        if (EVP_EncryptUpdate(ctx_.get(), out.data(), &len, zeros.data(),
                              static_cast<int>(zeros.size())) != 1 ||
            len != static_cast<int>(out.size()))
            raise(ErrorCode::RngFailure, "seeded RNG failure");
    }

private:
    void init(const std::array<uint8_t, 32>& key) {
        ctx_.reset(EVP_CIPHER_CTX_new());
        std::array<uint8_t, 16> iv{};  // 4-byte counter || 12-byte nonce, all zero
        if (!ctx_ || EVP_EncryptInit_ex(ctx_.get(), EVP_chacha20(), nullptr, key.data(), iv.data()) != 1)
            raise(ErrorCode::RngFailure, "seeded RNG init failure");
    }

    struct CtxFree {
        void operator()(EVP_CIPHER_CTX* c) const { EVP_CIPHER_CTX_free(c); }
    };
    std::unique_ptr<EVP_CIPHER_CTX, CtxFree> ctx_;
};

}  // namespace slie
