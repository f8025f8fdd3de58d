#include "pqpt/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

#include "pqpt/errors.hpp"

namespace pqpt {

Hash256 sha256(std::string_view data) {
  Hash256 out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != out.size()) {
    throw Error("SHA-256 digest failed");
  }
  return out;
}

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

std::string to_hex(const std::uint8_t* data, std::size_t len) {
  std::string out;
  out.reserve(len * 2);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(kHexDigits[data[i] >> 4]);
    out.push_back(kHexDigits[data[i] & 0xF]);
  }
  return out;
}

std::string to_hex(const Hash256& h) { return to_hex(h.data(), h.size()); }

std::string from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw InvalidArgumentError("odd-length hex string");
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_value(hex[i]);
    int lo = hex_value(hex[i + 1]);
    if (hi < 0 || lo < 0) throw InvalidArgumentError("non-hex character");
    out.push_back(static_cast<char>((hi << 4) | lo));
  }
  return out;
}

Hash256 hash_from_hex(std::string_view hex) {
  if (hex.size() != 64) throw InvalidArgumentError("hash hex must be 64 chars");
  std::string raw = from_hex(hex);
  Hash256 out{};
  std::copy(raw.begin(), raw.end(), out.begin());
  return out;
}

}  // namespace pqpt
