#pragma once

#include <openssl/crypto.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace slie {

// Wipe that survives dead-store elimination.
inline void secure_wipe(void* p, size_t n) {
    if (p != nullptr && n > 0) OPENSSL_cleanse(p, n);
}

// Byte buffer for key material; contents are wiped on destruction and on
// reallocation-free clear().
class SecretBytes {
public:
    SecretBytes() = default;
    explicit SecretBytes(std::vector<uint8_t> data) : data_(std::move(data)) {}
    SecretBytes(const uint8_t* p, size_t n) : data_(p, p + n) {}

    SecretBytes(const SecretBytes&) = default;
    SecretBytes& operator=(const SecretBytes&) = default;
    SecretBytes(SecretBytes&& other) noexcept : data_(std::move(other.data_)) { other.data_.clear(); }
    SecretBytes& operator=(SecretBytes&& other) noexcept {
        if (this != &other) {
            wipe();
            data_ = std::move(other.data_);
            other.data_.clear();
        }
        return *this;
    }

    ~SecretBytes() { wipe(); }

    uint8_t* data() { return data_.data(); }
    const uint8_t* data() const { return data_.data(); }
    size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    void resize(size_t n) { data_.resize(n); }

    std::vector<uint8_t>& vec() { return data_; }
    const std::vector<uint8_t>& vec() const { return data_; }

    void wipe() {
        secure_wipe(data_.data(), data_.size());
        data_.clear();
    }

private:
    std::vector<uint8_t> data_;
};

}  // namespace slie
