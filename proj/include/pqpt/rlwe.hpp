#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pqpt/prng.hpp"
#include "pqpt/rlwe_params.hpp"

namespace pqpt {

// Element of Z_q[x]/(x^n + 1); coefficients in [0, q), index = degree.
struct Poly {
  std::vector<std::uint32_t> c;

  bool operator==(const Poly& other) const = default;
};

struct RlwePublicKey {
  Poly a;
  Poly b;  // b = a*s + e
};

struct RlweKeyPair {
  RlwePublicKey pub;
  Poly s;  // centered binomial, |coeff| <= eta
};

struct RlweCiphertext {
  Poly u;
  Poly v;
};

// Uniform a; s, e centered binomial(eta); b = a*s + e.
RlweKeyPair keygen(const RlweParams& params, Prng& prng);

// u = a*r + e1, v = b*r + e2 + floor(q/2)*m for a 0/1 message polynomial.
// message.size() must equal n (MessageLengthMismatchError).
RlweCiphertext encrypt(const RlwePublicKey& pub, const RlweParams& params,
                       const std::vector<std::uint8_t>& message, Prng& prng);

// d = v - u*s; bit i = 1 iff |d_i - floor(q/2)| < q/4 in centered arithmetic.
std::vector<std::uint8_t> decrypt(const Poly& s, const RlweParams& params,
                                  const RlweCiphertext& ct);  // ParamMismatchError

// Byte payload encryption over n-bit blocks. Wire format:
//   "RLWE" || params wire id (1B) || original length (8B BE) ||
//   block count (4B BE) || blocks, each block = u then v, coefficients 2B BE.
// The encrypted bitstream is the 8-byte big-endian length followed by the
// payload, zero-padded to a block boundary; an empty payload emits a
// header-only blob with zero blocks. Requires a registered correct set.
std::string encrypt_payload(const RlwePublicKey& pub, const RlweParams& params,
                            std::string_view payload, Prng& prng);

std::string decrypt_payload(const Poly& s, const RlweParams& params,
                            std::string_view blob);  // MalformedBlobError / ParamMismatchError

}  // namespace pqpt
