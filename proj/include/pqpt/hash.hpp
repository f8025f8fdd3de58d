#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace pqpt {

using Hash256 = std::array<std::uint8_t, 32>;

Hash256 sha256(std::string_view data);

std::string to_hex(const std::uint8_t* data, std::size_t len);
std::string to_hex(const Hash256& h);

// Strict lowercase/uppercase hex of even length; throws InvalidArgumentError.
std::string from_hex(std::string_view hex);
Hash256 hash_from_hex(std::string_view hex);

}  // namespace pqpt
