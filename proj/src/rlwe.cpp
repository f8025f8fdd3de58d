#include "pqpt/rlwe.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pqpt/errors.hpp"
#include "pqpt/poly_mul.hpp"

namespace pqpt {

namespace {

Poly sample_uniform(const RlweParams& p, Prng& prng) {
  Poly out;
  out.c.resize(p.n);
  for (std::uint32_t i = 0; i < p.n; ++i) {
    out.c[i] = static_cast<std::uint32_t>(prng.next_below(p.q));
  }
  return out;
}

// Centered binomial: per coefficient, 2*eta bits consumed LSB-first from a
// 64-bit buffer (refilled on exhaustion, fresh per polynomial); the first eta
// bits count positive, the last eta negative.
Poly sample_cbd(const RlweParams& p, Prng& prng) {
  Poly out;
  out.c.resize(p.n);
  std::uint64_t buf = 0;
  unsigned bits_left = 0;
  auto next_bit = [&]() -> std::uint32_t {
    if (bits_left == 0) {
      buf = prng.next_u64();
      bits_left = 64;
    }
    std::uint32_t bit = static_cast<std::uint32_t>(buf & 1);
    buf >>= 1;
    --bits_left;
    return bit;
  };
  for (std::uint32_t i = 0; i < p.n; ++i) {
    std::int32_t acc = 0;
    for (std::uint32_t j = 0; j < p.eta; ++j) acc += static_cast<std::int32_t>(next_bit());
    for (std::uint32_t j = 0; j < p.eta; ++j) acc -= static_cast<std::int32_t>(next_bit());
    out.c[i] = acc >= 0 ? static_cast<std::uint32_t>(acc)
                        : p.q - static_cast<std::uint32_t>(-acc);
  }
  return out;
}

Poly mul(const Poly& a, const Poly& b, const RlweParams& p) {
  Poly out;
  out.c.resize(p.n);
  poly_mul(a.c.data(), b.c.data(), out.c.data(), p.n, p.q);
  return out;
}

Poly add(const Poly& a, const Poly& b, const RlweParams& p) {
  Poly out;
  out.c.resize(p.n);
  for (std::uint32_t i = 0; i < p.n; ++i) out.c[i] = (a.c[i] + b.c[i]) % p.q;
  return out;
}

void check_poly(const Poly& poly, const RlweParams& p, const char* what) {
  if (poly.c.size() != p.n) {
    throw ParamMismatchError(std::string(what) + " has degree " +
                             std::to_string(poly.c.size()) + ", params expect " +
                             std::to_string(p.n));
  }
  for (std::uint32_t coeff : poly.c) {
    if (coeff >= p.q) {
      throw ParamMismatchError(std::string(what) + " coefficient out of range for modulus " +
                               std::to_string(p.q));
    }
  }
}

void put_u32_be(std::string& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<char>((v >> shift) & 0xff));
  }
}

void put_u64_be(std::string& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<char>((v >> shift) & 0xff));
  }
}

void put_poly_be(std::string& out, const Poly& poly) {
  for (std::uint32_t coeff : poly.c) {
    out.push_back(static_cast<char>((coeff >> 8) & 0xff));
    out.push_back(static_cast<char>(coeff & 0xff));
  }
}

std::uint64_t block_count_for(std::uint64_t payload_len, std::uint32_t n) {
  if (payload_len == 0) return 0;
  std::uint64_t bits = 64 + 8 * payload_len;
  return (bits + n - 1) / n;
}

constexpr std::string_view kMagic = "RLWE";

}  // namespace

RlweKeyPair keygen(const RlweParams& params, Prng& prng) {
  RlweKeyPair kp;
  kp.pub.a = sample_uniform(params, prng);
  kp.s = sample_cbd(params, prng);
  Poly e = sample_cbd(params, prng);
  kp.pub.b = add(mul(kp.pub.a, kp.s, params), e, params);
  return kp;
}

RlweCiphertext encrypt(const RlwePublicKey& pub, const RlweParams& params,
                       const std::vector<std::uint8_t>& message, Prng& prng) {
  if (message.size() != params.n) {
    throw MessageLengthMismatchError("message has " + std::to_string(message.size()) +
                                     " bits, params expect " + std::to_string(params.n));
  }
  check_poly(pub.a, params, "public key a");
  check_poly(pub.b, params, "public key b");
  Poly r = sample_cbd(params, prng);
  Poly e1 = sample_cbd(params, prng);
  Poly e2 = sample_cbd(params, prng);
  RlweCiphertext ct;
  ct.u = add(mul(pub.a, r, params), e1, params);
  ct.v = add(mul(pub.b, r, params), e2, params);
  std::uint32_t half = params.q / 2;
  for (std::uint32_t i = 0; i < params.n; ++i) {
    if (message[i] & 1) ct.v.c[i] = (ct.v.c[i] + half) % params.q;
  }
  return ct;
}

std::vector<std::uint8_t> decrypt(const Poly& s, const RlweParams& params,
                                  const RlweCiphertext& ct) {
  check_poly(s, params, "secret key");
  check_poly(ct.u, params, "ciphertext u");
  check_poly(ct.v, params, "ciphertext v");
  Poly us = mul(ct.u, s, params);
  std::vector<std::uint8_t> out(params.n);
  std::int64_t half = params.q / 2;
  for (std::uint32_t i = 0; i < params.n; ++i) {
    std::int64_t d = (ct.v.c[i] + params.q - us.c[i]) % params.q;
    std::int64_t dist = d - half;
    if (dist < 0) dist = -dist;
    out[i] = 4 * dist < params.q ? 1 : 0;
  }
  return out;
}

std::string encrypt_payload(const RlwePublicKey& pub, const RlweParams& params,
                            std::string_view payload, Prng& prng) {
  if (params.wire_id == 0 || !params.correct) {
    throw UnregisteredParamsError(
        "payload encryption requires a registered parameter set with a correctness margin");
  }
  std::uint64_t len = payload.size();
  std::uint64_t blocks = block_count_for(len, params.n);
  std::string out;
  out.reserve(17 + blocks * 4 * params.n);
  out.append(kMagic);
  out.push_back(static_cast<char>(params.wire_id));
  put_u64_be(out, len);
  put_u32_be(out, static_cast<std::uint32_t>(blocks));
  if (blocks == 0) return out;

  // Bitstream: 8-byte big-endian length, then the payload, MSB-first.
  std::string stream;
  stream.reserve(8 + len);
  put_u64_be(stream, len);
  stream.append(payload);
  std::uint64_t total_bits = 8 * stream.size();
  std::vector<std::uint8_t> message(params.n);
  for (std::uint64_t block = 0; block < blocks; ++block) {
    for (std::uint32_t i = 0; i < params.n; ++i) {
      std::uint64_t bit_index = block * params.n + i;
      if (bit_index < total_bits) {
        std::uint8_t byte = static_cast<std::uint8_t>(stream[bit_index / 8]);
        message[i] = (byte >> (7 - bit_index % 8)) & 1;
      } else {
        message[i] = 0;
      }
    }
    RlweCiphertext ct = encrypt(pub, params, message, prng);
    put_poly_be(out, ct.u);
    put_poly_be(out, ct.v);
  }
  return out;
}

std::string decrypt_payload(const Poly& s, const RlweParams& params,
                            std::string_view blob) {
  auto need = [&](std::size_t bytes, const char* what) {
    if (blob.size() < bytes) {
      throw MalformedBlobError(std::string("blob truncated in ") + what);
    }
  };
  need(4, "magic");
  if (blob.substr(0, 4) != kMagic) throw MalformedBlobError("bad magic bytes");
  need(5, "params id");
  std::uint8_t wire_id = static_cast<std::uint8_t>(blob[4]);
  if (wire_id != params.wire_id) {
    throw ParamMismatchError("blob encodes params wire id " + std::to_string(wire_id) +
                             ", got set with wire id " + std::to_string(params.wire_id));
  }
  need(17, "header");
  std::uint64_t len = 0;
  for (int i = 0; i < 8; ++i) len = (len << 8) | static_cast<std::uint8_t>(blob[5 + i]);
  std::uint64_t blocks = 0;
  for (int i = 0; i < 4; ++i) blocks = (blocks << 8) | static_cast<std::uint8_t>(blob[13 + i]);
  if (blocks != block_count_for(len, params.n)) {
    throw MalformedBlobError("block count inconsistent with declared length");
  }
  std::size_t block_bytes = static_cast<std::size_t>(4) * params.n;
  need(17 + blocks * block_bytes, "blocks");
  if (blob.size() != 17 + blocks * block_bytes) {
    throw MalformedBlobError("trailing bytes after final block");
  }
  if (blocks == 0) return std::string();

  std::vector<std::uint8_t> bits;
  bits.reserve(blocks * params.n);
  std::size_t pos = 17;
  auto read_poly = [&]() {
    Poly poly;
    poly.c.resize(params.n);
    for (std::uint32_t i = 0; i < params.n; ++i) {
      std::uint32_t hi = static_cast<std::uint8_t>(blob[pos]);
      std::uint32_t lo = static_cast<std::uint8_t>(blob[pos + 1]);
      pos += 2;
      std::uint32_t coeff = (hi << 8) | lo;
      if (coeff >= params.q) throw MalformedBlobError("coefficient exceeds modulus");
      poly.c[i] = coeff;
    }
    return poly;
  };
  for (std::uint64_t block = 0; block < blocks; ++block) {
    RlweCiphertext ct;
    ct.u = read_poly();
    ct.v = read_poly();
    std::vector<std::uint8_t> message = decrypt(s, params, ct);
    bits.insert(bits.end(), message.begin(), message.end());
  }

  std::uint64_t embedded_len = 0;
  for (int i = 0; i < 64; ++i) embedded_len = (embedded_len << 1) | bits[i];
  if (embedded_len != len) {
    throw MalformedBlobError("embedded length disagrees with header");
  }
  std::string payload(len, '\0');
  for (std::uint64_t i = 0; i < 8 * len; ++i) {
    if (bits[64 + i]) {
      payload[i / 8] |= static_cast<char>(1u << (7 - i % 8));
    }
  }
  return payload;
}

}  // namespace pqpt
