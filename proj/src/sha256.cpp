#include "chebcrypt/sha256.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace chebcrypt {

Digest sha256(std::span<const uint8_t> data) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size()) {
        throw std::runtime_error("EVP_Digest(sha256) failed");
    }
    return out;
}

Digest sha256(std::string_view data) {
    return sha256(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(data.data()),
                                           data.size()));
}

std::string to_hex(const Digest& digest) {
    static const char* k = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (uint8_t b : digest) {
        out.push_back(k[b >> 4]);
        out.push_back(k[b & 0xF]);
    }
    return out;
}

}  // namespace chebcrypt
