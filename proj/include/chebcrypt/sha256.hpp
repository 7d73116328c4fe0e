// SHA-256 digest helpers (OpenSSL EVP backed).
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chebcrypt {

using Digest = std::array<uint8_t, 32>;

Digest sha256(std::span<const uint8_t> data);
Digest sha256(std::string_view data);

std::string to_hex(const Digest& digest);

}  // namespace chebcrypt
